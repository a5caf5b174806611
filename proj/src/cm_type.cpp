#include "lconvex/cm_type.hpp"

#include <algorithm>
#include <functional>

#include "lconvex/error.hpp"

namespace lconvex {

RectangleSizes rectangle_sizes(const Polyomino& p) {
  RectangleSizes s;
  s.m = p.width();
  s.n = p.height();
  for (const MaximalRectangle& r : maximal_rectangles(p)) {
    s.c.push_back(r.width);
    s.d.push_back(r.height);
  }
  return s;
}

namespace {

// 1-based views of c and d.
struct Sizes {
  const RectangleSizes& s;
  int m, n, t;
  explicit Sizes(const RectangleSizes& sizes) : s(sizes), m(sizes.m), n(sizes.n), t(sizes.t()) {}
  int c(int i) const { return s.c.at(i - 1); }
  int d(int i) const { return s.d.at(i - 1); }
};

// Sum over i_1, ..., i_len of first(i_1) * prod_{k>=2} middle(k, i_{k-1}, i_k)
// * last(i_len), each i_j ranging over [lo(j, i_{j-1}), hi(j)].
BigInt nested_sum(int len, const std::function<int(int, int)>& lo, const std::function<int(int)>& hi,
                  const std::function<BigInt(int)>& first, const std::function<BigInt(int, int, int)>& middle,
                  const std::function<BigInt(int)>& last) {
  BigInt total = 0;
  auto walk = [&](auto&& self, int j, int prev, const BigInt& acc) -> void {
    if (acc == 0) return;
    if (j > len) {
      total += acc * last(prev);
      return;
    }
    for (int i = lo(j, prev); i <= hi(j); ++i) {
      const BigInt factor = j == 1 ? first(i) : middle(j, prev, i);
      self(self, j + 1, i, acc * factor);
    }
  };
  walk(walk, 1, 0, BigInt(1));
  return total;
}

}  // namespace

BigInt type_A(const RectangleSizes& sizes) {
  const Sizes s(sizes);
  const int t = s.t;
  if (t < 2) return 0;
  return nested_sum(
      t - 1, [&](int j, int) { return s.m - s.c(t - j) + 1; },
      [&](int j) { return s.m - (s.n - s.d(t + 1 - j)) + 1; },
      [&](int i1) { return binomial(i1 - 1, s.d(t)); },
      [&](int k, int prev, int i) { return binomial(i - prev - 1, s.d(t - k + 1) - s.d(t - k + 2) - 1); },
      [&](int last) { return binomial(s.m - last, s.n - s.d(2) - 1); });
}

BigInt type_B(const RectangleSizes& sizes, FormulaReading reading) {
  const Sizes s(sizes);
  const int t = s.t;
  if (t < 2) return 0;
  const int top = reading.final_b_uses_n ? s.n : s.m;
  return nested_sum(
      t - 1,
      [&](int j, int prev) { return j == 1 ? s.m - s.c(t - 1) : prev + s.c(t - j + 1) - s.c(t - j); },
      [&](int j) { return s.d(t - j + 1); },
      [&](int i1) { return binomial(i1 - 1, s.m - s.c(t - 1) - 1); },
      [&](int k, int prev, int i) { return binomial(i - prev - 1, s.c(t - k + 1) - s.c(t - k) - 1); },
      [&](int last) { return binomial(top - last, s.c(1)); });
}

BigInt type_A_h(const RectangleSizes& sizes, int h) {
  const Sizes s(sizes);
  const int t = s.t;
  if (h < 1 || h > t - 1) throw Error(ErrorKind::DegenerateSizes, "A_h needs 1 <= h <= t-1");
  if (h == t - 1) return binomial(s.m - s.c(t - 1), s.d(t));
  return nested_sum(
      t - h - 1, [&](int j, int) { return s.m - s.c(t - j) + 1; },
      [&](int j) { return s.m - s.c(h) - (s.d(h + 1) - s.d(t - j + 1)) + 1; },
      [&](int i1) { return binomial(i1 - 1, s.d(t)); },
      [&](int k, int prev, int i) { return binomial(i - prev - 1, s.d(t - k + 1) - s.d(t - k + 2) - 1); },
      [&](int last) { return binomial(s.m - s.c(h) - last, s.d(h + 1) - s.d(h + 2) - 1); });
}

BigInt type_B_h(const RectangleSizes& sizes, int h, FormulaReading reading) {
  const Sizes s(sizes);
  const int t = s.t;
  if (h < 1 || h > t - 1) throw Error(ErrorKind::DegenerateSizes, "B_h needs 1 <= h <= t-1");
  if (h == 1) return binomial(s.n - s.d(2), s.c(1));
  const int offset = s.m - s.c(h);
  const int shift = reading.shift_first_b_h ? offset : 0;
  return nested_sum(
      h - 1,
      [&](int j, int prev) { return j == 1 ? s.m - s.c(h - 1) : prev + s.c(h - j + 1) - s.c(h - j); },
      [&](int j) { return offset + s.d(h - j + 1) - s.d(h + 1); },
      [&](int i1) { return binomial(i1 - 1 - shift, s.c(h) - s.c(h - 1) - 1); },
      [&](int k, int prev, int i) { return binomial(i - prev - 1, s.c(h - k + 1) - s.c(h - k) - 1); },
      [&](int last) { return binomial(offset + s.n - s.d(h + 1) - last, s.c(1)); });
}

ClosedType cm_type_closed(const RectangleSizes& sizes, FormulaReading reading) {
  ClosedType out;
  const int t = sizes.t();
  const int m = sizes.m, n = sizes.n;
  if (t == 1) {
    out.r = std::max(m, n);
    out.cases.push_back({"rectangle", out.r, binomial(std::max(m, n), std::min(m, n)), std::nullopt, std::nullopt});
    out.total = out.cases.front().value;
    return out;
  }
  std::vector<std::pair<std::string, int>> candidates{{"m", m}, {"n", n}};
  for (int h = 1; h <= t - 1; ++h) candidates.emplace_back("h=" + std::to_string(h), n + m - (sizes.c[h - 1] + sizes.d[h]));
  for (const auto& [label, value] : candidates) out.r = std::max(out.r, value);

  for (int k = 0; k < static_cast<int>(candidates.size()); ++k) {
    const auto& [label, value] = candidates[k];
    if (value != out.r) continue;
    CaseValue cv{label, value, 0, std::nullopt, std::nullopt};
    if (k == 0) cv.value = type_A(sizes);
    else if (k == 1) cv.value = type_B(sizes, reading);
    else {
      const int h = k - 1;
      cv.a_part = type_A_h(sizes, h);
      cv.b_part = type_B_h(sizes, h, reading);
      cv.value = *cv.a_part * *cv.b_part;
    }
    out.cases.push_back(std::move(cv));
  }
  if (out.cases.size() == 1) out.total = out.cases.front().value;
  return out;
}

ClosedType cm_type_closed(const Polyomino& p, FormulaReading reading) {
  return cm_type_closed(rectangle_sizes(p), reading);
}

ClosedType cm_type_two_rect(int m, int s, int t, int n) {
  if (!(1 <= s && s < n && 1 <= t && t < m)) {
    throw Error(ErrorKind::DegenerateSizes, "two maximal rectangles need 1 <= s < n and 1 <= t < m");
  }
  ClosedType out;
  const int third = n + m - (s + t);
  out.r = std::max({n, m, third});
  auto add = [&](std::string label, int r_value, BigInt value) {
    if (r_value == out.r) out.cases.push_back({std::move(label), r_value, std::move(value), std::nullopt, std::nullopt});
  };
  {
    BigInt sum = 0;
    for (int i = m - t; i <= m - (n - s); ++i) sum += binomial(i, s) * binomial(m - i - 1, n - s - 1);
    add("m", m, sum);
  }
  {
    BigInt sum = 0;
    for (int i = m - t; i <= s; ++i) sum += binomial(i - 1, m - t - 1) * binomial(n - i, t);
    add("n", n, sum);
  }
  add("n+m-(s+t)", third, binomial(n - s, t) * binomial(m - t, s));
  if (out.cases.size() == 1) out.total = out.cases.front().value;
  return out;
}

}  // namespace lconvex
