#include "stuq/batch.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "stuq/report.hpp"

namespace stuq {

namespace {

struct ParsedLine {
  bool ok = false;
  std::int64_t q0 = 0, p1 = 0, p2 = 0, p3 = 0;
  std::string error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

ParsedLine parse_jsonl(const std::string& line) {
  ParsedLine p;
  try {
    const auto j = nlohmann::json::parse(line);
    for (const char* key : {"q0", "p1", "p2", "p3"}) {
      if (!j.contains(key) || !j.at(key).is_number_integer()) {
        p.error = std::string("missing or non-integer field '") + key + "'";
        return p;
      }
    }
    p.q0 = j.at("q0").get<std::int64_t>();
    p.p1 = j.at("p1").get<std::int64_t>();
    p.p2 = j.at("p2").get<std::int64_t>();
    p.p3 = j.at("p3").get<std::int64_t>();
    p.ok = true;
  } catch (const std::exception& e) {
    p.error = std::string("invalid JSON: ") + e.what();
  }
  return p;
}

ParsedLine parse_csv(const std::string& line) {
  ParsedLine p;
  std::array<std::int64_t, 4> vals{};
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const auto comma = line.find(',', pos);
    const bool last = (i == 3);
    if (last != (comma == std::string::npos)) {
      p.error = "expected 4 comma-separated fields";
      return p;
    }
    const std::string field = trim(line.substr(pos, last ? std::string::npos : comma - pos));
    try {
      std::size_t used = 0;
      vals[i] = std::stoll(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      p.error = "invalid integer '" + field + "'";
      return p;
    }
    pos = comma + 1;
  }
  p.q0 = vals[0];
  p.p1 = vals[1];
  p.p2 = vals[2];
  p.p3 = vals[3];
  p.ok = true;
  return p;
}

struct LineResult {
  std::string json;
  int family = 0;  // 0 = error
};

LineResult process(const ParsedLine& p, std::size_t line_no) {
  LineResult r;
  if (!p.ok) {
    r.json = "{\"error\":" + nlohmann::json(p.error).dump() +
             ",\"line\":" + std::to_string(line_no) + "}";
    return r;
  }
  try {
    const ChargeVector c(p.q0, p.p1, p.p2, p.p3);
    const AnalysisReport rep = analyze(c);
    r.json = to_json_line(rep);
    r.family = rep.family.id;
  } catch (const std::exception& e) {
    r.json = "{\"error\":" + nlohmann::json(std::string(e.what())).dump() +
             ",\"line\":" + std::to_string(line_no) + "}";
  }
  return r;
}

}  // namespace

BatchResult run_batch(std::istream& in, std::ostream& out, int workers) {
  std::vector<std::pair<ParsedLine, std::size_t>> records;
  std::string line;
  std::size_t line_no = 0;
  bool csv = false;
  bool format_known = false;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (!format_known) {
      format_known = true;
      if (t[0] != '{') {
        // CSV requires the exact header on the first non-empty line.
        std::string header = t;
        header.erase(std::remove_if(header.begin(), header.end(),
                                    [](char ch) { return ch == ' ' || ch == '\t'; }),
                     header.end());
        if (header != "q0,p1,p2,p3") {
          ParsedLine bad;
          bad.error = "unrecognized input format: expected JSON lines or a 'q0,p1,p2,p3' CSV header";
          records.emplace_back(bad, line_no);
          break;
        }
        csv = true;
        continue;  // header consumed
      }
    }
    records.emplace_back(csv ? parse_csv(t) : parse_jsonl(t), line_no);
  }

  std::vector<LineResult> results(records.size());
  const int n = std::max(1, workers);
  if (n == 1 || records.size() < 2) {
    for (std::size_t i = 0; i < records.size(); ++i)
      results[i] = process(records[i].first, records[i].second);
  } else {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < records.size();)
        results[i] = process(records[i].first, records[i].second);
    };
    std::vector<std::thread> pool;
    const int count = std::min<std::size_t>(n, records.size());
    pool.reserve(count);
    for (int i = 0; i < count; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  BatchResult br;
  br.records = results.size();
  for (const auto& r : results) {
    out << r.json << "\n";
    if (r.family == 0) ++br.errors;
    else ++br.family_counts[r.family - 1];
  }

  out << "{\"summary\":{\"records\":" << br.records << ",\"errors\":" << br.errors
      << ",\"families\":{";
  for (int f = 1; f <= 7; ++f)
    out << (f > 1 ? "," : "") << "\"" << f << "\":" << br.family_counts[f - 1];
  out << "}}}\n";
  return br;
}

}  // namespace stuq
