#include "linalg.hpp"

#include <unordered_map>

namespace gorlab::detail {

namespace {

std::size_t rank_mod_p(const std::vector<SparseRow>& input, std::uint32_t p) {
  using Row = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::unordered_map<std::uint32_t, Row> pivots;  // leading column -> row with leading entry 1
  for (const auto& in : input) {
    Row row;
    for (auto [c, v] : in) {
      std::int64_t m = v % static_cast<std::int64_t>(p);
      if (m < 0) m += p;
      if (m) row.push_back({c, static_cast<std::uint64_t>(m)});
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        std::uint64_t inv = inverse_mod(row.front().second, p);
        for (auto& e : row) e.second = e.second * inv % p;
        std::uint32_t key = row.front().first;
        pivots.emplace(key, std::move(row));
        break;
      }
      // row -= row.lead * pivot
      std::uint64_t c = row.front().second;
      const Row& pv = it->second;
      Row out;
      out.reserve(row.size() + pv.size());
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < pv.size()) {
        if (b == pv.size() || (a < row.size() && row[a].first < pv[b].first)) {
          out.push_back(row[a++]);
        } else if (a == row.size() || pv[b].first < row[a].first) {
          out.push_back({pv[b].first, (p - c * pv[b].second % p) % p});
          ++b;
        } else {
          std::uint64_t v = (row[a].second + p - c * pv[b].second % p) % p;
          if (v) out.push_back({row[a].first, v});
          ++a;
          ++b;
        }
      }
      row = std::move(out);
    }
  }
  return pivots.size();
}

std::size_t rank_rational(const std::vector<SparseRow>& input) {
  using Row = std::vector<std::pair<std::uint32_t, Scalar>>;
  std::unordered_map<std::uint32_t, Row> pivots;
  for (const auto& in : input) {
    Row row;
    for (auto [c, v] : in)
      if (v) row.push_back({c, Scalar(v)});
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        Scalar inv = 1 / row.front().second;
        for (auto& e : row) e.second *= inv;
        std::uint32_t key = row.front().first;
        pivots.emplace(key, std::move(row));
        break;
      }
      Scalar c = row.front().second;
      const Row& pv = it->second;
      Row out;
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < pv.size()) {
        if (b == pv.size() || (a < row.size() && row[a].first < pv[b].first)) {
          out.push_back(row[a++]);
        } else if (a == row.size() || pv[b].first < row[a].first) {
          out.push_back({pv[b].first, -c * pv[b].second});
          ++b;
        } else {
          Scalar v = row[a].second - c * pv[b].second;
          if (v != 0) out.push_back({row[a].first, v});
          ++a;
          ++b;
        }
      }
      row = std::move(out);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t matrix_rank(const std::vector<SparseRow>& rows, const Field& field) {
  if (field.is_rational()) return rank_rational(rows);
  return rank_mod_p(rows, field.characteristic());
}

}  // namespace gorlab::detail
