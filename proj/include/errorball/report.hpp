#pragma once
// Verification records and their CSV / JSON serializations. Both formats
// round-trip: parsing an emitted document reproduces the record list.

#include <cstdint>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errorball/ballsize.hpp"
#include "errorball/errors.hpp"
#include "errorball/sequence.hpp"

namespace errorball {

struct verification_record {
  std::string seq;
  int q = 2;
  std::size_t n = 0;
  std::size_t rho = 0;
  channel_spec channel;
  std::optional<std::uint64_t> formula_size;
  std::optional<std::uint64_t> oracle_size;
  std::optional<bool> match;
  std::string method;
  friend bool operator==(const verification_record&, const verification_record&) = default;
};

struct sweep_summary {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  double seconds = 0.0;
  std::optional<std::string> resume_cursor;
};

inline verification_record make_record(const sequence& w, const ball_report& report) {
  verification_record rec;
  rec.seq = w.str();
  rec.q = w.q();
  rec.n = w.size();
  rec.rho = report.diagnostics.rho;
  rec.channel = report.spec;
  rec.formula_size = report.size;
  rec.oracle_size = report.oracle_size;
  rec.match = report.oracle_match;
  rec.method = to_string(report.method);
  return rec;
}

inline constexpr const char* csv_header =
    "seq,q,n,rho,t1,t2,t3,formula_size,oracle_size,match,method";

inline void write_csv(std::ostream& out, const std::vector<verification_record>& records) {
  out << csv_header << '\n';
  for (const verification_record& r : records) {
    out << r.seq << ',' << r.q << ',' << r.n << ',' << r.rho << ',' << r.channel.substitutions
        << ',' << r.channel.deletions << ',' << r.channel.insertions << ',';
    if (r.formula_size) out << *r.formula_size;
    out << ',';
    if (r.oracle_size) out << *r.oracle_size;
    out << ',';
    if (r.match) out << (*r.match ? "true" : "false");
    out << ',' << r.method << '\n';
  }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

}  // namespace detail

inline std::vector<verification_record> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("missing CSV header", 1);
  if (line != csv_header) throw parse_error("unexpected CSV header: " + line, 1);
  std::vector<verification_record> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f = detail::split_csv_line(line);
    if (f.size() != 11) throw parse_error("expected 11 CSV fields", line_no);
    verification_record r;
    r.seq = f[0];
    r.q = std::stoi(f[1]);
    r.n = std::stoull(f[2]);
    r.rho = std::stoull(f[3]);
    r.channel = {std::stoi(f[4]), std::stoi(f[5]), std::stoi(f[6])};
    if (!f[7].empty()) r.formula_size = std::stoull(f[7]);
    if (!f[8].empty()) r.oracle_size = std::stoull(f[8]);
    if (!f[9].empty()) r.match = f[9] == "true";
    r.method = f[10];
    records.push_back(std::move(r));
  }
  return records;
}

inline nlohmann::json to_json(const verification_record& r) {
  nlohmann::json j;
  j["seq"] = r.seq;
  j["q"] = r.q;
  j["n"] = r.n;
  j["rho"] = r.rho;
  j["t1"] = r.channel.substitutions;
  j["t2"] = r.channel.deletions;
  j["t3"] = r.channel.insertions;
  j["formula_size"] = r.formula_size ? nlohmann::json(*r.formula_size) : nlohmann::json();
  j["oracle_size"] = r.oracle_size ? nlohmann::json(*r.oracle_size) : nlohmann::json();
  j["match"] = r.match ? nlohmann::json(*r.match) : nlohmann::json();
  j["method"] = r.method;
  return j;
}

inline void write_json(std::ostream& out, const std::vector<verification_record>& records,
                       const std::optional<sweep_summary>& summary = std::nullopt) {
  nlohmann::json doc;
  doc["records"] = nlohmann::json::array();
  for (const verification_record& r : records) doc["records"].push_back(to_json(r));
  if (summary) {
    nlohmann::json s;
    s["checked"] = summary->checked;
    s["mismatches"] = summary->mismatches;
    s["seconds"] = summary->seconds;
    if (summary->resume_cursor) s["resume_cursor"] = *summary->resume_cursor;
    doc["summary"] = s;
  }
  out << doc.dump(2) << '\n';
}

inline std::pair<std::vector<verification_record>, std::optional<sweep_summary>> parse_json(
    std::istream& in) {
  nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<verification_record> records;
  for (const nlohmann::json& j : doc.at("records")) {
    verification_record r;
    r.seq = j.at("seq").get<std::string>();
    r.q = j.at("q").get<int>();
    r.n = j.at("n").get<std::size_t>();
    r.rho = j.at("rho").get<std::size_t>();
    r.channel = {j.at("t1").get<int>(), j.at("t2").get<int>(), j.at("t3").get<int>()};
    if (!j.at("formula_size").is_null())
      r.formula_size = j.at("formula_size").get<std::uint64_t>();
    if (!j.at("oracle_size").is_null()) r.oracle_size = j.at("oracle_size").get<std::uint64_t>();
    if (!j.at("match").is_null()) r.match = j.at("match").get<bool>();
    r.method = j.at("method").get<std::string>();
    records.push_back(std::move(r));
  }
  std::optional<sweep_summary> summary;
  if (doc.contains("summary")) {
    sweep_summary s;
    s.checked = doc["summary"].at("checked").get<std::uint64_t>();
    s.mismatches = doc["summary"].at("mismatches").get<std::uint64_t>();
    s.seconds = doc["summary"].at("seconds").get<double>();
    if (doc["summary"].contains("resume_cursor"))
      s.resume_cursor = doc["summary"]["resume_cursor"].get<std::string>();
    summary = s;
  }
  return {std::move(records), summary};
}

inline void write_table(std::ostream& out, const std::vector<verification_record>& records) {
  out << std::left << std::setw(18) << "seq" << std::setw(4) << "q" << std::setw(4) << "n"
      << std::setw(5) << "rho" << std::setw(10) << "channel" << std::setw(14) << "formula_size"
      << std::setw(13) << "oracle_size" << std::setw(7) << "match" << "method" << '\n';
  for (const verification_record& r : records) {
    std::ostringstream channel;
    channel << r.channel.substitutions << ',' << r.channel.deletions << ','
            << r.channel.insertions;
    out << std::left << std::setw(18) << r.seq << std::setw(4) << r.q << std::setw(4) << r.n
        << std::setw(5) << r.rho << std::setw(10) << channel.str() << std::setw(14)
        << (r.formula_size ? std::to_string(*r.formula_size) : "-") << std::setw(13)
        << (r.oracle_size ? std::to_string(*r.oracle_size) : "-") << std::setw(7)
        << (r.match ? (*r.match ? "true" : "false") : "-") << r.method << '\n';
  }
}

}  // namespace errorball
