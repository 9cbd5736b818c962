#include "lvint/integrals.hpp"

#include <algorithm>
#include <functional>

namespace lvint {

namespace {

// The defining inequalities of the tuple family, for a strictly increasing
// (2i+1)-tuple in [1, n] with d = n - k:
//   (1)  m_{i+s} < m_s + d <= m_{i+s+1}   for s = 1..i
//   (2)  m_{2i+1} < m_{i+1} + d
bool satisfies_conditions(const IndexTuple& t, int n, int k, int i) {
  const int d = n - k;
  for (int s = 1; s <= i; ++s) {
    if (!(t[i + s - 1] < t[s - 1] + d && t[s - 1] + d <= t[i + s])) return false;
  }
  return t[2 * i] < t[i] + d;
}

void enumerate_by_inequalities(const SystemSpec& spec, int i,
                               std::vector<IndexTuple>& out) {
  const int n = spec.n, d = n - spec.k;
  const int len = 2 * i + 1;
  IndexTuple tuple(len, 0);
  // Positions are filled left to right; both bounds below are exact, so the
  // recursion only visits prefixes of actual members.
  std::function<void(int)> fill = [&](int pos) {  // pos is 0-based
    const int place = pos + 1;                    // 1-based position
    int lo = pos == 0 ? 1 : tuple[pos - 1] + 1;
    if (place >= i + 2) lo = std::max(lo, tuple[place - i - 2] + d);
    int hi = n - (len - place);
    if (place >= i + 1 && place <= 2 * i) hi = std::min(hi, tuple[place - i - 1] + d - 1);
    if (place == len && i > 0) hi = std::min(hi, tuple[i] + d - 1);
    for (int v = lo; v <= hi; ++v) {
      tuple[pos] = v;
      if (pos + 1 == len)
        out.push_back(tuple);
      else
        fill(pos + 1);
    }
  };
  fill(0);
}

void enumerate_by_submatrix(const SystemSpec& spec, int i,
                            std::vector<IndexTuple>& out) {
  const SkewToeplitz ambient = structure_matrix(spec);
  const SkewToeplitz model = structure_matrix(SystemSpec(2 * i + 1, i));
  const int len = 2 * i + 1;
  IndexTuple tuple(len);
  std::function<void(int, int)> fill = [&](int pos, int lo) {
    if (pos == len) {
      for (int s = 0; s < len; ++s)
        for (int t = s + 1; t < len; ++t)
          if (ambient.entry(tuple[s] - 1, tuple[t] - 1) != model.entry(s, t)) return;
      out.push_back(tuple);
      return;
    }
    for (int v = lo; v <= spec.n - (len - pos - 1); ++v) {
      tuple[pos] = v;
      fill(pos + 1, v + 1);
    }
  };
  fill(0, 1);
}

}  // namespace

std::vector<IndexTuple> enumerate_index_tuples(const SystemSpec& spec, int i,
                                               EnumMethod method) {
  if (i < 0) throw std::invalid_argument("enumerate_index_tuples: negative half-length");
  std::vector<IndexTuple> out;
  if (i > spec.k) return out;  // the family is empty beyond k
  switch (method) {
    case EnumMethod::inequalities:
      enumerate_by_inequalities(spec, i, out);
      break;
    case EnumMethod::submatrix:
      enumerate_by_submatrix(spec, i, out);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool tuple_in_family(const IndexTuple& tuple, const SystemSpec& spec, int i) {
  if (static_cast<int>(tuple.size()) != 2 * i + 1) return false;
  if (i > spec.k) return false;
  for (std::size_t s = 0; s < tuple.size(); ++s) {
    if (tuple[s] < 1 || tuple[s] > spec.n) return false;
    if (s > 0 && tuple[s] <= tuple[s - 1]) return false;
  }
  return satisfies_conditions(tuple, spec.n, spec.k, i);
}

LaurentPolynomial polynomial_integral(const SystemSpec& spec, int i) {
  LaurentPolynomial sum(spec.n);
  for (const IndexTuple& tuple : enumerate_index_tuples(spec, i)) {
    Exponents exps(spec.n, 0);
    for (int index : tuple) exps[index - 1] = 1;
    sum += LaurentPolynomial::monomial(spec.n, std::move(exps));
  }
  return sum;
}

std::vector<BaseRationalIntegral> base_rational_integrals(int m) {
  if (m < 2) throw std::invalid_argument("base_rational_integrals: requires m >= 2");
  const int r = (m + 1) / 2;
  const bool odd = m % 2 == 1;

  auto forward = [&](int ell) {
    BaseRationalIntegral entry;
    entry.window_lo = 1;
    entry.window_hi = odd ? 2 * ell - 1 : 2 * ell;
    entry.ratio.assign(m, 0);
    for (int v = entry.window_hi + 2; v <= m; v += 2) entry.ratio[v - 1] = 1;
    for (int v = entry.window_hi + 1; v <= m - 1; v += 2) entry.ratio[v - 1] = -1;
    LaurentPolynomial window_sum(m);
    for (int v = entry.window_lo; v <= entry.window_hi; ++v)
      window_sum += LaurentPolynomial::variable(m, v - 1);
    entry.poly = window_sum * LaurentPolynomial::monomial(m, entry.ratio);
    return entry;
  };
  auto reflected = [&](const BaseRationalIntegral& f) {
    BaseRationalIntegral entry;
    entry.poly = psi_reflect(f.poly);
    entry.ratio.assign(f.ratio.rbegin(), f.ratio.rend());
    entry.window_lo = m + 1 - f.window_hi;
    entry.window_hi = m + 1 - f.window_lo;
    return entry;
  };

  // Fixed order: F_1 .. F_{r-1}, then the reflections (from index 2 when m is
  // odd, from 1 when even), then the Hamiltonian F_r.
  std::vector<BaseRationalIntegral> list;
  list.reserve(m - 1);
  for (int ell = 1; ell <= r - 1; ++ell) list.push_back(forward(ell));
  for (int ell = odd ? 2 : 1; ell <= r - 1; ++ell) list.push_back(reflected(forward(ell)));
  list.push_back(forward(r));
  return list;
}

std::vector<RationalIntegral> rational_integrals(const SystemSpec& spec) {
  if (2 * spec.k >= spec.n)
    throw std::invalid_argument("rational_integrals: requires 2k < n");
  const int m = spec.m();
  std::vector<RationalIntegral> list;
  if (m <= 2) return list;  // n = 2k+1 or 2k+2: no rational integrals

  const std::vector<BaseRationalIntegral> base = base_rational_integrals(m);
  list.reserve(m - 2);
  for (int idx = 0; idx < m - 2; ++idx) {  // drop the final Hamiltonian entry
    const BaseRationalIntegral& b = base[idx];
    RationalIntegral entry;
    if (spec.k == 0) {
      entry.poly = b.poly;
      entry.cofactor = LaurentPolynomial::monomial(m, b.ratio);
      entry.window_lo = b.window_lo;
      entry.window_hi = b.window_hi;
    } else {
      entry.poly = phi_pullback(b.poly, spec);
      // The ratio has as many numerator as denominator factors, so its
      // pullback only shifts indices; one factor of P_k remains.
      Exponents exps(spec.n, 0);
      for (int j = 0; j < spec.k; ++j) {
        exps[j] = 1;
        exps[spec.n - 1 - j] = 1;
      }
      for (int v = 1; v <= m; ++v) exps[spec.k + v - 1] += b.ratio[v - 1];
      entry.cofactor = LaurentPolynomial::monomial(spec.n, std::move(exps));
      entry.window_lo = b.window_lo + spec.k;
      entry.window_hi = b.window_hi + spec.k;
    }
    list.push_back(std::move(entry));
  }
  return list;
}

long middle_column_count(const SystemSpec& spec, int i) {
  if (i < 1 || i > spec.k)
    throw std::invalid_argument("middle_column_count: index out of range");
  const std::vector<IndexTuple> tuples = enumerate_index_tuples(spec, i);
  long count = -1;
  for (int j = spec.k + 1; j <= spec.n - spec.k; ++j) {
    long containing = 0;
    for (const IndexTuple& t : tuples)
      if (std::binary_search(t.begin(), t.end(), j)) ++containing;
    if (count < 0)
      count = containing;
    else if (count != containing)
      throw std::logic_error("middle_column_count: count depends on the column, "
                             "the middle-replacement property is violated");
  }
  return count;
}

ShiftConstants shift_constants(const SystemSpec& spec) {
  if (spec.n <= 2 * spec.k + 1)
    throw std::invalid_argument("shift_constants: requires n > 2k+1");
  ShiftConstants shifts;
  for (const RationalIntegral& h : rational_integrals(spec))
    shifts.p.push_back(h.window_hi - h.window_lo + 1);
  for (int i = 1; i <= spec.k; ++i) shifts.q.push_back(middle_column_count(spec, i));
  return shifts;
}

std::vector<std::string> IntegralFamily::labels() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < polynomial.size(); ++i)
    names.push_back("K" + std::to_string(i));
  for (std::size_t l = 0; l < rational.size(); ++l)
    names.push_back("H" + std::to_string(l + 1));
  return names;
}

IntegralFamily integral_family(const SystemSpec& spec) {
  IntegralFamily family{spec, {}, {}, {}};
  for (int i = 0; i <= spec.k; ++i)
    family.polynomial.push_back(polynomial_integral(spec, i));
  if (!spec.boundary()) {
    family.rational = rational_integrals(spec);
    family.shifts = shift_constants(spec);
  } else if (spec.k >= 1) {
    for (int i = 1; i <= spec.k; ++i)
      family.shifts.q.push_back(middle_column_count(spec, i));
  }
  return family;
}

}  // namespace lvint
