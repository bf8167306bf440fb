#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace picard::oracle {

namespace {

Perm compose(const Perm& p, const Perm& q) {  // x -> q(p(x))
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

Perm cycle_perm(std::size_t n, std::vector<std::vector<int>> cycles) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
  return p;
}

// k x k minors by enumerating index subsets.
void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::size_t permutation_group_order(const std::vector<Perm>& gens) {
  if (gens.empty()) return 1;
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> todo{id};
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm q = compose(p, g);
      if (seen.insert(q).second) todo.push_back(std::move(q));
    }
  }
  return seen.size();
}

bool satisfies(const std::vector<Perm>& gens, const std::vector<Word>& relators) {
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  for (const auto& r : relators) {
    Perm p = id;
    for (Letter l : r) {
      const Perm& g = gens[static_cast<std::size_t>(letter_gen(l))];
      p = compose(p, letter_is_inverse(l) ? invert(g) : g);
    }
    if (p != id) return false;
  }
  return true;
}

std::vector<SmallGroup> small_group_corpus() {
  auto P = [](std::vector<std::string> names, std::vector<std::string> rels, std::string label) {
    return Presentation::from_expressions(std::move(names), rels, std::move(label));
  };
  std::vector<SmallGroup> c;
  c.push_back({"C7", P({"a"}, {"a^7"}, "C7"), {cycle_perm(7, {{0, 1, 2, 3, 4, 5, 6}})}});
  c.push_back({"S3", P({"a", "b"}, {"a^2", "b^3", "(a b)^2"}, "S3"),
               {cycle_perm(3, {{0, 1}}), cycle_perm(3, {{0, 1, 2}})}});
  c.push_back({"C2xC2", P({"a", "b"}, {"a^2", "b^2", "a b a^-1 b^-1"}, "V4"),
               {cycle_perm(4, {{0, 1}, {2, 3}}), cycle_perm(4, {{0, 2}, {1, 3}})}});
  c.push_back({"Q8", P({"a", "b"}, {"a^4", "a^2 b^-2", "b^-1 a b a"}, "Q8"),
               {cycle_perm(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}), cycle_perm(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})}});
  c.push_back({"D5", P({"a", "b"}, {"a^5", "b^2", "(a b)^2"}, "D5"),
               {cycle_perm(5, {{0, 1, 2, 3, 4}}), cycle_perm(5, {{1, 4}, {2, 3}})}});
  c.push_back({"A4", P({"a", "b"}, {"a^2", "b^3", "(a b)^3"}, "A4"),
               {cycle_perm(4, {{0, 1}, {2, 3}}), cycle_perm(4, {{0, 1, 2}})}});
  c.push_back({"S4", P({"a", "b"}, {"a^2", "b^3", "(a b)^4"}, "S4"),
               {cycle_perm(4, {{0, 1}}), cycle_perm(4, {{1, 2, 3}})}});
  c.push_back({"C3xC4", P({"a", "b"}, {"a^3", "b^4", "[a,b]"}, "C12"),
               {cycle_perm(7, {{0, 1, 2}}), cycle_perm(7, {{3, 4, 5, 6}})}});
  {
    // SL(2,3) acting on the eight nonzero vectors of F_3^2; s^3 = t^3 = (st)^2 = -I.
    auto act = [](int m00, int m01, int m10, int m11) {
      Perm p(8);
      auto idx = [](int x, int y) { return x * 3 + y - 1; };
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
          if (x != 0 || y != 0)
            p[static_cast<std::size_t>(idx(x, y))] = idx((m00 * x + m01 * y) % 3, (m10 * x + m11 * y) % 3);
      return p;
    };
    c.push_back({"SL(2,3)", P({"a", "b"}, {"a^3 b^-3", "(a b)^2 a^-3"}, "SL(2,3)"),
                 {act(2, 2, 0, 2), act(2, 0, 2, 2)}});
  }
  return c;
}

std::vector<mpz_class> invariant_factors_by_minors(const IntMatrix& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<mpz_class> dets{1};  // d_0 = 1
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
        const mpz_class det = determinant(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      }
    if (g == 0) break;
    dets.push_back(g);
  }
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k < dets.size(); ++k) out.push_back(dets[k] / dets[k - 1]);
  return out;
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

bool smith_postcondition(const IntMatrix& a, const SmithForm& s) {
  if (s.L.rows() != a.rows() || s.R.rows() != a.cols()) return false;
  if (!(s.L * a * s.R == s.D)) return false;
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j && s.D(i, j) != 0) return false;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (s.D(i, i) < 0) return false;
    if (i + 1 < n && s.D(i, i) != 0 && s.D(i + 1, i + 1) % s.D(i, i) != 0) return false;
    if (i + 1 < n && s.D(i, i) == 0 && s.D(i + 1, i + 1) != 0) return false;
  }
  return abs(determinant(s.L)) == 1 && abs(determinant(s.R)) == 1;
}

Word random_word(std::mt19937_64& rng, int generators, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, generators - 1);
  std::bernoulli_distribution inv(0.5);
  Word w(len(rng));
  for (auto& l : w) l = gen_letter(gen(rng), inv(rng));
  return w;
}

mpq_class newton_sqrt(const mpq_class& x, int iterations) {
  mpq_class y = x;
  for (int i = 0; i < iterations; ++i) {
    y = (y + x / y) / 2;
    y.canonicalize();
  }
  return y;
}

}  // namespace picard::oracle
