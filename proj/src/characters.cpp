#include "thickrep/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "thickrep/errors.hpp"

namespace thickrep {

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

Partition parse_partition(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream in(cleaned);
  Partition p;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v <= 0) throw Error(Errc::ParseError, "bad partition part '" + tok + "'");
    p.push_back(v);
  }
  if (p.empty()) throw Error(Errc::ParseError, "empty partition");
  if (!std::is_sorted(p.rbegin(), p.rend())) throw Error(Errc::ParseError, "partition parts must not increase");
  return p;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::size_t index_of(const Partition& mu) {
  const auto all = partitions(size_of(mu));
  const auto it = std::find(all.begin(), all.end(), mu);
  if (it == all.end()) throw Error(Errc::PreconditionFailed, "not a partition: " + to_string(mu));
  return static_cast<std::size_t>(it - all.begin());
}

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a bead
// from b to b - r; the sign counts beads strictly in between.
struct MurnaghanNakayama {
  std::map<std::pair<Partition, Partition>, long long> memo;

  long long value(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    const auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mu.front();
    const Partition rest_mu(mu.begin() + 1, mu.end());
    const int k = static_cast<int>(lambda.size());
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);
    long long total = 0;
    for (int i = 0; i < k; ++i) {
      const int target = beta[i] - r;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int between = 0;
      for (int b : beta)
        if (b > target && b < beta[i]) ++between;
      std::vector<int> moved = beta;
      moved[i] = target;
      std::sort(moved.rbegin(), moved.rend());
      Partition smaller;
      for (int j = 0; j < k; ++j) {
        const int part = moved[j] - (k - 1 - j);
        if (part > 0) smaller.push_back(part);
      }
      total += (between % 2 ? -1 : 1) * value(smaller, rest_mu);
    }
    memo.emplace(key, total);
    return total;
  }
};

}  // namespace

std::vector<Partition> partitions(int d) {
  std::vector<Partition> out;
  if (d < 0) return out;
  Partition cur;
  partitions_rec(d, d, cur, out);
  return out;
}

std::uint64_t class_size(const Partition& mu) {
  std::map<int, int> mult;
  for (int c : mu) ++mult[c];
  std::uint64_t z = 1;
  for (const auto& [c, k] : mult) {
    for (int i = 0; i < k; ++i) z *= static_cast<std::uint64_t>(c);
    z *= factorial(k);
  }
  return factorial(size_of(mu)) / z;
}

Partition square_cycle_type(const Partition& mu) {
  Partition out;
  for (int c : mu) {
    if (c % 2 == 0) {
      out.push_back(c / 2);
      out.push_back(c / 2);
    } else {
      out.push_back(c);
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::uint64_t hook_length_dim(const Partition& lambda) {
  const int d = size_of(lambda);
  std::uint64_t hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int below = 0;
      for (std::size_t t = i + 1; t < lambda.size() && lambda[t] > j; ++t) ++below;
      hooks *= static_cast<std::uint64_t>(lambda[i] - j + below);
    }
  return factorial(d) / hooks;
}

mpq_class ClassFunction::at(const Partition& mu) const { return values.at(index_of(mu)); }

mpq_class ClassFunction::degree() const { return d == 0 ? mpq_class(1) : at(Partition(static_cast<std::size_t>(d), 1)); }

ClassFunction sym_char(const Partition& lambda) {
  const int d = size_of(lambda);
  if (d > kMaxSymmetricDegree) throw Error(Errc::ScaleExceeded, "characters limited to d <= 8");
  index_of(lambda);
  MurnaghanNakayama mn;
  ClassFunction chi;
  chi.d = d;
  for (const Partition& mu : partitions(d)) chi.values.emplace_back(static_cast<long>(mn.value(lambda, mu)));
  return chi;
}

ClassFunction exterior_square_char(const ClassFunction& chi) {
  ClassFunction out;
  out.d = chi.d;
  for (const Partition& mu : partitions(chi.d)) {
    const mpq_class a = chi.at(mu);
    out.values.push_back((a * a - chi.at(square_cycle_type(mu))) / 2);
  }
  return out;
}

mpq_class inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.d != b.d) throw Error(Errc::DimensionMismatch, "class functions of different degrees");
  const auto all = partitions(a.d);
  mpq_class s = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    s += mpq_class(static_cast<unsigned long>(class_size(all[i]))) * a.values[i] * b.values[i];
  return s / mpq_class(static_cast<unsigned long>(factorial(a.d)));
}

std::vector<std::pair<Partition, long long>> decompose(const ClassFunction& f) {
  std::vector<std::pair<Partition, long long>> out;
  std::vector<mpq_class> rebuilt(f.values.size(), 0);
  for (const Partition& lambda : partitions(f.d)) {
    const ClassFunction chi = sym_char(lambda);
    const mpq_class mult = inner_product(f, chi);
    if (mult.get_den() != 1)
      throw Error(Errc::NonIntegralMultiplicity, "multiplicity of " + to_string(lambda) + " is " + mult.get_str());
    if (mult == 0) continue;
    out.emplace_back(lambda, mult.get_num().get_si());
    for (std::size_t i = 0; i < rebuilt.size(); ++i) rebuilt[i] += mult * chi.values[i];
  }
  if (rebuilt != f.values) throw Error(Errc::NonIntegralMultiplicity, "not a virtual character");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void add_to(Laurent2& acc, const Laurent2& p, long long scale) {
  for (const auto& [mono, c] : p) {
    long long& slot = acc[mono];
    slot += scale * c;
    if (slot == 0) acc.erase(mono);
  }
}

Laurent2 multiply(const Laurent2& a, const Laurent2& b) {
  Laurent2 out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      const std::pair<int, int> mono{ma.first + mb.first, ma.second + mb.second};
      long long& slot = out[mono];
      slot += ca * cb;
      if (slot == 0) out.erase(mono);
    }
  return out;
}

}  // namespace

Laurent2 gl2_char(int p, int q) {
  if (p < q) throw Error(Errc::PreconditionFailed, "highest weight needs p >= q");
  Laurent2 out;
  for (int i = 0; i <= p - q; ++i) out[{q + i, q + (p - q - i)}] = 1;
  return out;
}

std::vector<std::pair<int, int>> gl2_wedge_summands(int a, int b) {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= (a + 1) / 2; ++k) out.emplace_back(2 * a + 2 * b - 2 * k + 1, 2 * b + 2 * k - 1);
  return out;
}

bool gl2_wedge_matches(int a, int b, const std::vector<std::pair<int, int>>& summands) {
  if (a < 0) throw Error(Errc::PreconditionFailed, "a must be nonnegative");
  const Laurent2 ch = gl2_char(a + b, b);
  Laurent2 doubled;  // ch(x^2, y^2)
  for (const auto& [mono, c] : ch) doubled[{2 * mono.first, 2 * mono.second}] = c;
  Laurent2 twice_lhs = multiply(ch, ch);
  add_to(twice_lhs, doubled, -1);
  Laurent2 twice_rhs;
  for (const auto& [p, q] : summands) {
    if (p < q) return false;
    add_to(twice_rhs, gl2_char(p, q), 2);
  }
  return twice_lhs == twice_rhs;
}

bool gl2_wedge_identity(int a, int b) { return gl2_wedge_matches(a, b, gl2_wedge_summands(a, b)); }

std::vector<std::uint64_t> distinct_parts_coeffs(int n) {
  if (n < 1) throw Error(Errc::BadN, "n must be at least 1");
  std::vector<std::uint64_t> c{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(c.size() + static_cast<std::size_t>(i), 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j];
      next[j + static_cast<std::size_t>(i)] += c[j];
    }
    c = std::move(next);
  }
  const int top = n * (n + 1) / 2;
  if (n >= 3)
    for (int i = 0; i <= top; ++i)
      if (c[i] < 1 || (i >= 3 && i <= top - 3 && c[i] < 2))
        throw Error(Errc::PreconditionFailed, "coefficient bound fails at " + std::to_string(i));
  return c;
}

std::string to_string(PlethysmKind kind) { return kind == PlethysmKind::sym2 ? "sym2" : "wedge2"; }

namespace {

// Semistandard fillings of lambda with entries 1..n, row by row.
void ssyt_rec(const Partition& lambda, int n, std::size_t row, std::size_t col, std::vector<std::vector<int>>& t,
              std::vector<int>& weight, SymPoly& out) {
  if (row == lambda.size()) {
    ++out[weight];
    return;
  }
  if (col == static_cast<std::size_t>(lambda[row])) {
    ssyt_rec(lambda, n, row + 1, 0, t, weight, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, t[row][col - 1]);
  if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
  for (int v = lo; v <= n; ++v) {
    t[row][col] = v;
    ++weight[v - 1];
    ssyt_rec(lambda, n, row, col + 1, t, weight, out);
    --weight[v - 1];
  }
}

}  // namespace

SymPoly schur_polynomial(const Partition& lambda, int n) {
  SymPoly out;
  if (static_cast<int>(lambda.size()) > n) return out;
  std::vector<std::vector<int>> t;
  for (int part : lambda) t.emplace_back(static_cast<std::size_t>(part), 0);
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  ssyt_rec(lambda, n, 0, 0, t, weight, out);
  return out;
}

std::vector<std::pair<Partition, long long>> schur_expand(SymPoly f, int n) {
  std::vector<std::pair<Partition, long long>> out;
  while (!f.empty()) {
    // The lexicographically largest exponent vector is a dominant weight.
    const auto& [lead, coeff] = *f.rbegin();
    if (coeff < 0) throw Error(Errc::PreconditionFailed, "negative coefficient while peeling Schur polynomials");
    Partition lambda;
    for (int e : lead)
      if (e > 0) lambda.push_back(e);
    if (!std::is_sorted(lead.rbegin(), lead.rend()))
      throw Error(Errc::PreconditionFailed, "leading monomial is not dominant");
    const long long c = coeff;
    for (const auto& [mono, k] : schur_polynomial(lambda, n)) {
      long long& slot = f[mono];
      slot -= c * k;
      if (slot == 0) f.erase(mono);
    }
    out.emplace_back(lambda, c);
  }
  return out;
}

std::uint64_t plethysm_component_count(PlethysmKind kind, int n, int m) {
  if (n < 1 || n > 4 || m < 0 || m > 6) throw Error(Errc::ScaleExceeded, "plethysm counts limited to n <= 4, m <= 6");
  std::vector<std::vector<int>> weights;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (kind == PlethysmKind::wedge2 && i == j) continue;
      std::vector<int> w(static_cast<std::size_t>(n), 0);
      ++w[i];
      ++w[j];
      weights.push_back(w);
    }
  // Character of the m-th exterior power: sum over m-subsets of weights.
  SymPoly ch;
  const int total = static_cast<int>(weights.size());
  if (m > total) return 0;
  std::vector<int> pick(static_cast<std::size_t>(m));
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::vector<int> mono(static_cast<std::size_t>(n), 0);
    for (int idx : pick)
      for (int v = 0; v < n; ++v) mono[v] += weights[idx][v];
    ++ch[mono];
    int i = m;
    while (i > 0 && pick[i - 1] == total - m + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (int j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::uint64_t count = 0;
  for (const auto& [lambda, mult] : schur_expand(ch, n)) count += static_cast<std::uint64_t>(mult);
  return count;
}

}  // namespace thickrep
