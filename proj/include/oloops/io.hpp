#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oloops/extension.hpp"
#include "oloops/loop_table.hpp"
#include "oloops/triple_system.hpp"

namespace oloops {

using json = nlohmann::json;

namespace io {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::bad_input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::bad_input, "cannot write " + path);
  out << data;
}

// ---- loops ----
// text: line 1 = n, then n rows of n integers
// json: {"order": n, "table": [[...]], "label": "..."}

inline json loop_to_json(const LoopTable& L) {
  json j;
  j["order"] = L.order();
  j["table"] = L.rows();
  if (!L.label().empty()) j["label"] = L.label();
  return j;
}

inline LoopTable loop_from_json(const json& j) {
  if (!j.contains("order") || !j.contains("table"))
    throw error(errc::bad_input, "loop object needs 'order' and 'table'");
  std::string label = j.value("label", std::string{});
  return validate_loop(j["order"].get<int>(),
                       j["table"].get<std::vector<std::vector<int>>>(), label);
}

inline std::string loop_to_text(const LoopTable& L) {
  std::ostringstream out;
  out << L.order() << "\n";
  for (const auto& row : L.rows()) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << "\n";
  }
  return out.str();
}

inline LoopTable loop_from_text(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw error(errc::bad_input, "missing loop order");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> rows[i][j])) throw error(errc::bad_input, "truncated loop table");
  return validate_loop(n, std::move(rows));
}

// ---- triple systems ----
// text: line 1 = n, then one block per line
// json: {"n": int, "blocks": [[a,b,c],...]} (+ "orientation" for oriented)

inline json sts_to_json(const TripleSystem& S) {
  json j;
  j["n"] = S.n();
  j["blocks"] = json::array();
  for (const auto& b : S.blocks()) j["blocks"].push_back({b[0], b[1], b[2]});
  return j;
}

inline json oriented_sts_to_json(const OrientedTripleSystem& O) {
  json j = sts_to_json(O.base());
  j["orientation"] = json::array();
  for (const auto& r : O.orientation()) j["orientation"].push_back({r[0], r[1], r[2]});
  return j;
}

inline std::vector<Block> blocks_from_json(const json& arr) {
  std::vector<Block> blocks;
  for (const auto& b : arr) {
    if (!b.is_array() || b.size() != 3) throw error(errc::bad_input, "block must have 3 points");
    blocks.push_back({b[0].get<int>(), b[1].get<int>(), b[2].get<int>()});
  }
  return blocks;
}

inline TripleSystem sts_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("blocks"))
    throw error(errc::bad_input, "STS object needs 'n' and 'blocks'");
  return validate_sts(j["n"].get<int>(), blocks_from_json(j["blocks"]));
}

inline OrientedTripleSystem oriented_sts_from_json(const json& j) {
  TripleSystem S = sts_from_json(j);
  if (!j.contains("orientation"))
    throw error(errc::bad_input, "oriented STS object needs 'orientation'");
  return OrientedTripleSystem(std::move(S), blocks_from_json(j["orientation"]));
}

inline std::string sts_to_text(const TripleSystem& S) {
  std::ostringstream out;
  out << S.n() << "\n";
  for (const auto& b : S.blocks()) out << b[0] << " " << b[1] << " " << b[2] << "\n";
  return out.str();
}

inline TripleSystem sts_from_text(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw error(errc::bad_input, "missing point count");
  std::vector<Block> blocks;
  int a, b, c;
  while (in >> a >> b >> c) blocks.push_back({a, b, c});
  return validate_sts(n, std::move(blocks));
}

// ---- factor systems ----
// json: {"m": int, "signs": [[+-1,...],...]}

inline json factor_system_to_json(const FactorSystem& F) {
  json j;
  j["m"] = F.m;
  j["signs"] = json::array();
  for (int i = 0; i < F.m; ++i) {
    json row = json::array();
    for (int k = 0; k < F.m; ++k) row.push_back(F.sign(i, k));
    j["signs"].push_back(row);
  }
  return j;
}

inline FactorSystem factor_system_from_json(const json& j) {
  FactorSystem F;
  F.m = j.at("m").get<int>();
  auto rows = j.at("signs").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(rows.size()) != F.m)
    throw error(errc::size_mismatch, "signs row count != m");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != F.m)
      throw error(errc::size_mismatch, "signs row length != m");
    for (int v : row) F.signs.push_back(static_cast<int8_t>(v));
  }
  F.validate();
  return F;
}

/// Sniffs whether a file holds a loop or a triple system, in either format.
enum class FileKind { loop, sts, oriented_sts };

inline FileKind sniff(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '{') {
      json j = json::parse(text);
      if (j.contains("table")) return FileKind::loop;
      if (j.contains("orientation")) return FileKind::oriented_sts;
      if (j.contains("blocks")) return FileKind::sts;
      throw error(errc::bad_input, "unrecognized JSON object");
    }
    break;
  }
  // text format: a loop of order n has n tokens per row; an STS has
  // 3 per line with n(n-1)/6 lines. Disambiguate by total token count.
  std::istringstream in(text);
  long long n;
  if (!(in >> n)) throw error(errc::bad_input, "empty input");
  long long tokens = 0;
  int v;
  while (in >> v) ++tokens;
  if (tokens == n * n) return FileKind::loop;
  if (tokens == 3 * (n * (n - 1) / 6)) return FileKind::sts;
  throw error(errc::bad_input, "cannot tell loop from STS by shape");
}

}  // namespace io
}  // namespace oloops
