#include "picard/fpgroups.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace picard {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word power(const Word& w, long n) {
  const Word base = n < 0 ? inverse_word(w) : w;
  Word out;
  for (long k = 0; k < (n < 0 ? -n : n); ++k) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(out);
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
                           std::string name)
    : names_(std::move(generator_names)), name_(std::move(name)) {
  for (const auto& r : relators) add_relator(r);
}

Presentation Presentation::from_expressions(std::vector<std::string> generator_names,
                                            const std::vector<std::string>& relators, std::string name) {
  std::vector<Word> rels;
  for (const auto& e : relators) rels.push_back(parse_word(e, generator_names));
  return Presentation(std::move(generator_names), std::move(rels), std::move(name));
}

void Presentation::add_relator(const Word& w) {
  for (Letter l : w) {
    if (l == 0 || letter_gen(l) >= generators()) throw std::out_of_range("relator letter out of range");
  }
  Word r = free_reduce(w);
  if (!r.empty()) relators_.push_back(std::move(r));
}

Presentation quotient_by_normal_gens(const Presentation& p, const std::vector<Word>& extra) {
  Presentation q = p;
  for (const auto& w : extra) q.add_relator(w);
  return q;
}

// ---------------------------------------------------------------------------
// Abelianization

mpz_class AbelianInvariants::order() const {
  if (!is_finite()) throw std::domain_error("abelian group is infinite");
  mpz_class n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string AbelianInvariants::to_string() const {
  std::vector<std::string> parts;
  for (const auto& d : torsion) parts.push_back("Z/" + d.get_str());
  if (rank == 1) parts.emplace_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

std::vector<mpz_class> exponent_vector(const Word& w, int generators) {
  std::vector<mpz_class> v(static_cast<std::size_t>(generators));
  for (Letter l : w) v.at(static_cast<std::size_t>(letter_gen(l))) += letter_is_inverse(l) ? -1 : 1;
  return v;
}

IntMatrix exponent_matrix(const Presentation& p) {
  const auto n = static_cast<std::size_t>(p.generators());
  IntMatrix a(p.relators().size(), n);
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const auto v = exponent_vector(p.relators()[i], p.generators());
    for (std::size_t j = 0; j < n; ++j) a(i, j) = v[j];
  }
  return a;
}

AbelianizationMap::AbelianizationMap(const Presentation& p) : generators_(p.generators()) {
  const auto n = static_cast<std::size_t>(p.generators());
  const IntMatrix a = exponent_matrix(p);
  SmithForm snf = smith_normal_form(a);
  change_ = snf.R;
  const std::size_t k = std::min(a.rows(), n);
  std::vector<std::size_t> free_slots;
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class d = i < k ? snf.D(i, i) : mpz_class(0);
    if (d == 1) continue;
    if (d == 0) {
      free_slots.push_back(i);
    } else {
      slots_.push_back(i);
      moduli_.push_back(d);
      inv_.torsion.push_back(d);
    }
  }
  for (std::size_t i : free_slots) {
    slots_.push_back(i);
    moduli_.emplace_back(0);
  }
  inv_.rank = free_slots.size();
}

std::vector<mpz_class> AbelianizationMap::image(const Word& w) const {
  const auto v = exponent_vector(w, generators_);
  std::vector<mpz_class> out;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    mpz_class c = 0;
    for (std::size_t j = 0; j < v.size(); ++j) c += v[j] * change_(j, slots_[s]);
    if (moduli_[s] != 0) {
      mpz_class m = c % moduli_[s];
      if (m < 0) m += moduli_[s];
      c = m;
    }
    out.push_back(c);
  }
  return out;
}

bool AbelianizationMap::is_trivial(const Word& w) const {
  const auto img = image(w);
  return std::all_of(img.begin(), img.end(), [](const mpz_class& c) { return c == 0; });
}

mpz_class AbelianizationMap::order(const Word& w) const {
  const auto img = image(w);
  mpz_class ord = 1;
  for (std::size_t s = 0; s < img.size(); ++s) {
    if (img[s] == 0) continue;
    if (moduli_[s] == 0) return 0;
    const mpz_class g = gcd(img[s], moduli_[s]);
    mpz_class part = moduli_[s] / g;
    ord = lcm(ord, part);
  }
  return ord;
}

AbelianInvariants abelianization(const Presentation& p) { return AbelianizationMap(p).invariants(); }

// ---------------------------------------------------------------------------
// Rewriting and substitutions

namespace {

struct Rule {
  Word lhs;  // s
  Word rhs;  // t, shorter than s
};

template <class Normalize>
std::vector<Rule> rewriting_rules(const std::vector<Word>& relators, Normalize normalize) {
  std::vector<Rule> rules;
  for (const auto& rel : relators) {
    for (const Word& r : {cyclic_reduce(normalize(rel)), cyclic_reduce(normalize(inverse_word(rel)))}) {
      const std::size_t len = r.size();
      for (std::size_t rot = 0; rot < len; ++rot) {
        Word rho(r.begin() + static_cast<long>(rot), r.end());
        rho.insert(rho.end(), r.begin(), r.begin() + static_cast<long>(rot));
        for (std::size_t k = len; k > len / 2; --k) {
          Word s(rho.begin(), rho.begin() + static_cast<long>(k));
          Word rest(rho.begin() + static_cast<long>(k), rho.end());
          rules.push_back({std::move(s), normalize(inverse_word(rest))});
        }
      }
    }
  }
  // Longest left-hand sides first so deletions win over shortenings.
  std::stable_sort(rules.begin(), rules.end(),
                   [](const Rule& x, const Rule& y) { return x.lhs.size() > y.lhs.size(); });
  return rules;
}

}  // namespace

bool reduces_to_identity(const Word& w, const std::vector<Word>& relators, std::size_t max_steps) {
  // Generators with a relator x^2 are involutions: write x^-1 as x.
  std::vector<Letter> involutions;
  for (const auto& rel : relators) {
    const Word r = cyclic_reduce(rel);
    if (r.size() == 2 && r[0] == r[1]) involutions.push_back(r[0] > 0 ? r[0] : -r[0]);
  }
  auto normalize = [&](Word x) {
    for (auto& l : x)
      if (l < 0 && std::find(involutions.begin(), involutions.end(), -l) != involutions.end()) l = -l;
    return x;
  };
  const auto rules = rewriting_rules(relators, normalize);

  Word cur = cyclic_reduce(normalize(w));
  for (std::size_t step = 0; step < max_steps; ++step) {
    cur = cyclic_reduce(normalize(cur));
    if (cur.empty()) return true;
    bool applied = false;
    const std::size_t n = cur.size();
    for (const auto& rule : rules) {
      const std::size_t k = rule.lhs.size();
      if (k > n) continue;
      for (std::size_t pos = 0; pos < n && !applied; ++pos) {
        bool match = true;
        for (std::size_t i = 0; i < k && match; ++i) match = cur[(pos + i) % n] == rule.lhs[i];
        if (!match) continue;
        Word next = rule.rhs;
        for (std::size_t i = k; i < n; ++i) next.push_back(cur[(pos + i) % n]);
        cur = std::move(next);
        applied = true;
      }
      if (applied) break;
    }
    if (!applied) return false;
  }
  return false;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (Letter l : w) {
    const Word& img = images.at(static_cast<std::size_t>(letter_gen(l)));
    const Word piece = letter_is_inverse(l) ? inverse_word(img) : img;
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(out);
}

TietzeCheck verify_tietze(const Presentation& source, const Presentation& target,
                          const TietzeSubstitution& sub) {
  TietzeCheck check;
  if (sub.forward.size() != static_cast<std::size_t>(source.generators()) ||
      sub.backward.size() != static_cast<std::size_t>(target.generators())) {
    throw std::invalid_argument("substitution does not match generator counts");
  }
  check.inverse_maps = true;
  for (int g = 0; g < source.generators(); ++g) {
    if (substitute(sub.forward[static_cast<std::size_t>(g)], sub.backward) != Word{gen_letter(g)}) check.inverse_maps = false;
  }
  for (int g = 0; g < target.generators(); ++g) {
    if (substitute(sub.backward[static_cast<std::size_t>(g)], sub.forward) != Word{gen_letter(g)}) check.inverse_maps = false;
  }
  check.forward_relators = std::all_of(source.relators().begin(), source.relators().end(), [&](const Word& r) {
    return reduces_to_identity(substitute(r, sub.forward), target.relators());
  });
  check.backward_relators = std::all_of(target.relators().begin(), target.relators().end(), [&](const Word& r) {
    return reduces_to_identity(substitute(r, sub.backward), source.relators());
  });
  return check;
}

}  // namespace picard
