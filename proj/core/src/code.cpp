#include "toric/code.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "toric/budget.hpp"

namespace toric {

namespace {

long double power(long double b, std::size_t e) {
  long double r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<Word>& rows, const FiniteField& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    auto s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      auto m = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t weight(const Word& w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](int x) { return x != 0; }));
}

}  // namespace

std::vector<Word> torus_points(const FiniteField& f, std::size_t n) {
  check_budget("torus_points", power(f.q() - 1, n), 1000000);
  std::vector<Word> out;
  Word x(n, 1);
  for (;;) {
    out.push_back(x);
    std::size_t k = n;
    while (k > 0) {
      if (++x[k - 1] < f.q()) break;
      x[k - 1] = 1;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

ToricCode toric_code(const std::vector<IntVector>& points, std::int64_t q) {
  FiniteField f(q);
  ToricCode c;
  c.q = f.q();
  if (points.empty()) throw DomainError("toric_code: empty point set");
  c.dim = points[0].size();
  for (const auto& p : points)
    if (p.size() != c.dim) throw DomainError("toric_code: points have different dimensions");
  check_budget("code_length", power(c.q - 1, c.dim), 10000);
  auto torus = torus_points(f, c.dim);
  c.length = torus.size();
  c.source_points = points;
  for (const auto& p : points) {
    Word row;
    row.reserve(torus.size());
    for (const auto& t : torus) {
      int v = 1;
      for (std::size_t i = 0; i < c.dim; ++i) {
        Integer e = p[i] % (c.q - 1);
        v = f.mul(v, f.pow(t[i], e.convert_to<long long>()));
      }
      row.push_back(v);
    }
    c.generator_rows.push_back(std::move(row));
  }
  c.basis = c.generator_rows;
  rref(c.basis, f);
  c.k = c.basis.size();
  return c;
}

std::size_t minimum_distance(const ToricCode& c) {
  if (c.k == 0) throw DomainError("minimum_distance: the zero code has no nonzero codewords");
  FiniteField f(c.q);
  check_budget("min_distance", power(c.q, c.k), 10000000);
  const std::size_t k = c.k, len = c.length;
  // mult[r][s] = s * basis[r]
  std::vector<std::vector<Word>> mult(k, std::vector<Word>(c.q, Word(len)));
  for (std::size_t r = 0; r < k; ++r)
    for (int s = 0; s < c.q; ++s)
      for (std::size_t j = 0; j < len; ++j) mult[r][s][j] = f.mul(s, c.basis[r][j]);

  std::atomic<std::size_t> best{len};
  std::atomic<int> next_digit{0};
  auto worker = [&] {
    // stack[r] holds the partial sum of the first r digit multiples.
    std::vector<Word> stack(k + 1, Word(len));
    std::function<void(std::size_t, bool)> rec = [&](std::size_t depth, bool nonzero) {
      if (best.load(std::memory_order_relaxed) <= 1) return;
      if (depth == k) {
        if (!nonzero) return;
        std::size_t w = weight(stack[k]);
        std::size_t cur = best.load();
        while (w < cur && !best.compare_exchange_weak(cur, w)) {
        }
        return;
      }
      for (int s = 0; s < c.q; ++s) {
        Word& out = stack[depth + 1];
        const Word& in = stack[depth];
        const Word& add = mult[depth][s];
        for (std::size_t j = 0; j < len; ++j) out[j] = f.add(in[j], add[j]);
        rec(depth + 1, nonzero || s != 0);
      }
    };
    for (int d0; (d0 = next_digit.fetch_add(1)) < c.q;) {
      stack[1] = mult[0][d0];
      rec(1, d0 != 0);
    }
  };
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned nthreads = std::min<unsigned>(hw, static_cast<unsigned>(c.q));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return best.load();
}

std::vector<Word> codewords(const ToricCode& c) {
  FiniteField f(c.q);
  check_budget("codewords", power(c.q, c.k), 10000);
  std::vector<Word> out;
  std::vector<int> msg(c.k, 0);
  for (;;) {
    Word w(c.length, 0);
    for (std::size_t r = 0; r < c.k; ++r)
      for (std::size_t j = 0; j < c.length; ++j) w[j] = f.add(w[j], f.mul(msg[r], c.basis[r][j]));
    out.push_back(std::move(w));
    std::size_t r = c.k;
    while (r > 0) {
      if (++msg[r - 1] < c.q) break;
      msg[r - 1] = 0;
      --r;
    }
    if (r == 0) break;
  }
  return out;
}

std::vector<Word> dual_code_basis(const ToricCode& c) {
  FiniteField f(c.q);
  std::vector<Word> rows = c.basis;
  auto pivots = rref(rows, f);
  std::vector<Word> out;
  std::vector<bool> is_pivot(c.length, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < c.length; ++free) {
    if (is_pivot[free]) continue;
    Word v(c.length, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rows[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

HansenCase parse_hansen_case(const std::string& s) {
  if (s == "a" || s == "A") return HansenCase::A;
  if (s == "b" || s == "B") return HansenCase::B;
  if (s == "c" || s == "C") return HansenCase::C;
  throw DomainError("unknown Hansen case '" + s + "' (expected a, b or c)");
}

const char* to_string(HansenCase c) {
  switch (c) {
    case HansenCase::A: return "a";
    case HansenCase::B: return "b";
    case HansenCase::C: return "c";
  }
  return "?";
}

HansenBound hansen_bound(HansenCase c, std::int64_t a, std::int64_t b, std::int64_t q) {
  if (a < 1) throw DomainError("hansen_bound: a must be a positive integer");
  if (c == HansenCase::C && b < 1) throw DomainError("hansen_bound: b must be a positive integer");
  if (!is_prime_power(q)) throw DomainError("hansen_bound: q = " + std::to_string(q) + " is not a prime power");
  HansenBound h{c, a, c == HansenCase::C ? b : 0, q};
  h.n = (q - 1) * (q - 1);
  switch (c) {
    case HansenCase::A:
      if (!(q > 2 * a + 1)) throw DomainError("hansen_bound case a requires q > 2a+1");
      h.k = (a + 1) * (a + 1);
      h.d_lower = h.n - 2 * a * (q - 1);
      break;
    case HansenCase::B:
      if (!(q > a + 1)) throw DomainError("hansen_bound case b requires q > a+1");
      h.k = (a + 1) * (a + 2) / 2;
      h.d_lower = h.n - a * (q - 1);
      break;
    case HansenCase::C:
      if (!(q > std::max(a, b) + 1)) throw DomainError("hansen_bound case c requires q > max(a,b)+1");
      h.k = (a + 1) * (b + 1);
      h.d_lower = h.n - a * (q - 1) - b * (q - 1) + a * b;
      break;
  }
  return h;
}

std::vector<IntVector> hansen_polytope_points(HansenCase c, std::int64_t a, std::int64_t b) {
  auto v = [](std::int64_t x, std::int64_t y) { return IntVector{Integer(x), Integer(y)}; };
  std::vector<IntVector> verts;
  switch (c) {
    case HansenCase::A: verts = {v(0, 0), v(a, a), v(0, 2 * a)}; break;
    case HansenCase::B: verts = {v(0, 0), v(a, 0), v(0, a)}; break;
    case HansenCase::C: verts = {v(0, 0), v(a, 0), v(0, b), v(a, b)}; break;
  }
  return lattice_points(LatticePolytope::from_vertices(2, verts));
}

ConjectureCheck check_distance_conjecture(HansenCase c, std::int64_t a, std::int64_t b, std::int64_t q) {
  HansenBound h = hansen_bound(c, a, b, q);
  ToricCode code = toric_code(hansen_polytope_points(c, a, b), q);
  ConjectureCheck r;
  r.bound = h.d_lower;
  r.actual = minimum_distance(code);
  r.equal = static_cast<std::int64_t>(r.actual) == r.bound;
  return r;
}

GoppaCode goppa_toric_code(const TDivisor& d, std::int64_t q) {
  auto exps = riemann_roch(d);
  if (exps.empty()) throw DomainError("goppa_toric_code: L(D) is zero");
  GoppaCode g;
  g.code = toric_code(exps, q);
  g.dual_basis = dual_code_basis(g.code);
  return g;
}

}  // namespace toric
