#include "picard/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace picard {

CosetTable::CosetTable(int generators, std::vector<int> data, EnumerationStatus status, EnumerationStats stats)
    : cols_(2 * static_cast<std::size_t>(generators)), data_(std::move(data)), status_(status), stats_(stats) {}

int CosetTable::act(std::size_t c, const Word& w) const {
  int cur = static_cast<int>(c);
  for (Letter l : w) {
    if (cur < 0) return -1;
    cur = act(static_cast<std::size_t>(cur), l);
  }
  return cur;
}

std::vector<int> CosetTable::permutation(int g) const {
  if (!complete()) throw std::logic_error("permutation of an incomplete coset table");
  std::vector<int> perm(index());
  for (std::size_t c = 0; c < index(); ++c) perm[c] = act(c, gen_letter(g));
  return perm;
}

namespace {

constexpr int kUndef = -1;

struct Overflow {};

class Enumerator {
 public:
  Enumerator(const Presentation& p, const EnumerationLimits& limits)
      : cols_(2 * static_cast<std::size_t>(p.generators())), limits_(limits) {
    for (const auto& r : p.relators()) {
      Word c = cyclic_reduce(r);
      if (!c.empty()) relators_.push_back(cols_of(c));
    }
    new_coset();
  }

  CosetTable run(const std::vector<Word>& subgroup) {
    EnumerationStatus status = EnumerationStatus::Complete;
    try {
      for (const auto& w : subgroup) {
        const Word r = free_reduce(w);
        if (!r.empty()) scan_and_fill(0, cols_of(r));
        process_deductions();
      }
      for (std::size_t pos = 0; pos < order_.size(); ++pos) {
        const int c = order_[pos];
        if (!alive(c)) continue;
        for (const auto& r : relators_) {
          scan_and_fill(c, r);
          process_deductions();
          if (!alive(c)) break;
        }
        for (std::size_t x = 0; x < cols_ && alive(c); ++x) {
          if (entry(c, x) == kUndef) {
            define(c, x);
            process_deductions();
          }
        }
        if (alive(c) && order_.size() > 1024 && dead_in_order_ * 2 > order_.size()) compact_order(pos);
      }
    } catch (const Overflow&) {
      status = EnumerationStatus::Overflowed;
    }
    return standardize(status);
  }

 private:
  std::size_t cols_;
  EnumerationLimits limits_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<int> table_;
  std::vector<int> parent_;  // union-find; parent_[c] == c for live cosets
  std::vector<int> order_;   // live cosets in definition order (may contain dead entries)
  std::size_t dead_in_order_ = 0;
  std::size_t live_ = 0;
  std::vector<std::pair<int, std::size_t>> deductions_;
  bool deductions_dropped_ = false;
  EnumerationStats stats_;

  static std::size_t inv(std::size_t x) { return x ^ 1U; }

  std::vector<std::size_t> cols_of(const Word& w) const {
    std::vector<std::size_t> out;
    for (Letter l : w) out.push_back(CosetTable::column(l));
    return out;
  }

  int& entry(int c, std::size_t x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  int new_coset() {
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndef);
    order_.push_back(c);
    ++live_;
    ++stats_.defined;
    stats_.max_live = std::max(stats_.max_live, live_);
    return c;
  }

  void define(int c, std::size_t x) {
    if (live_ >= limits_.max_cosets) throw Overflow{};
    const int d = new_coset();
    entry(c, x) = d;
    entry(d, inv(x)) = c;
    push_deduction(c, x);
  }

  void push_deduction(int c, std::size_t x) {
    if (deductions_.size() >= limits_.max_deductions) {
      deductions_dropped_ = true;
      return;
    }
    deductions_.emplace_back(c, x);
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
    --live_;
    ++dead_in_order_;
    ++stats_.coincidences;
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int e = queue[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        const int f = entry(e, x);
        if (f == kUndef) continue;
        if (entry(f, inv(x)) == e) entry(f, inv(x)) = kUndef;
        const int e1 = rep(e);
        const int f1 = rep(f);
        if (entry(e1, x) != kUndef) {
          merge(f1, entry(e1, x), queue);
        } else if (entry(f1, inv(x)) != kUndef) {
          merge(e1, entry(f1, inv(x)), queue);
        } else {
          entry(e1, x) = f1;
          entry(f1, inv(x)) = e1;
          push_deduction(e1, x);
        }
      }
    }
  }

  // Scans w at c. With fill, undefined gaps are closed by new cosets.
  void scan(int c, const std::vector<std::size_t>& w, bool fill) {
    int f = c;
    int b = c;
    std::size_t i = 0;
    std::size_t j = w.size();  // exclusive end
    for (;;) {
      while (i < j && entry(f, w[i]) != kUndef) f = entry(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, inv(w[j - 1])) != kUndef) b = entry(b, inv(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = b;
        entry(b, inv(w[i])) = f;
        push_deduction(f, w[i]);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void scan_and_fill(int c, const std::vector<std::size_t>& w) { scan(c, w, true); }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan(c, r, false);
      }
      const int d = entry(c, x);
      if (d != kUndef && alive(d)) {
        for (const auto& r : relators_) {
          if (!alive(d)) break;
          scan(d, r, false);
        }
      }
    }
    deductions_dropped_ = false;
  }

  // Drops dead entries from the processing order; order_[pos] must be alive.
  void compact_order(std::size_t& pos) {
    std::vector<int> kept;
    std::size_t new_pos = 0;
    for (std::size_t k = 0; k < order_.size(); ++k) {
      if (k == pos) new_pos = kept.size();
      if (alive(order_[k])) kept.push_back(order_[k]);
    }
    order_ = std::move(kept);
    pos = new_pos;
    dead_in_order_ = 0;
  }

  CosetTable standardize(EnumerationStatus status) {
    std::vector<int> relabel(parent_.size(), kUndef);
    std::vector<int> seq;
    relabel[0] = 0;
    seq.push_back(0);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      const int c = seq[k];
      for (std::size_t x = 0; x < cols_; ++x) {
        int d = entry(c, x);
        if (d == kUndef) continue;
        d = rep(d);
        if (relabel[static_cast<std::size_t>(d)] == kUndef) {
          relabel[static_cast<std::size_t>(d)] = static_cast<int>(seq.size());
          seq.push_back(d);
        }
      }
    }
    std::vector<int> data(seq.size() * cols_, kUndef);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      for (std::size_t x = 0; x < cols_; ++x) {
        const int d = entry(seq[k], x);
        if (d != kUndef) data[k * cols_ + x] = relabel[static_cast<std::size_t>(rep(d))];
      }
    }
    return CosetTable(static_cast<int>(cols_ / 2), std::move(data), status, stats_);
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, const EnumerationLimits& limits) {
  if (p.generators() == 0) {
    return CosetTable(0, {}, EnumerationStatus::Complete, EnumerationStats{1, 1, 0});
  }
  Enumerator e(p, limits);
  return e.run(subgroup);
}

CosetTable coset_table_from_action(const std::vector<std::vector<int>>& perms) {
  const std::size_t gens = perms.size();
  const std::size_t n = gens ? perms[0].size() : 1;
  std::vector<std::vector<int>> inv(gens, std::vector<int>(n, -1));
  for (std::size_t g = 0; g < gens; ++g) {
    if (perms[g].size() != n) throw std::invalid_argument("permutations of different degrees");
    for (std::size_t x = 0; x < n; ++x) {
      const int y = perms[g][x];
      if (y < 0 || static_cast<std::size_t>(y) >= n || inv[g][static_cast<std::size_t>(y)] != -1)
        throw std::invalid_argument("not a permutation");
      inv[g][static_cast<std::size_t>(y)] = static_cast<int>(x);
    }
  }
  // Standardize by breadth-first discovery from 0.
  std::vector<int> relabel(n, -1);
  std::vector<std::size_t> seq{0};
  relabel[0] = 0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    for (std::size_t g = 0; g < gens; ++g) {
      for (int img : {perms[g][seq[k]], inv[g][seq[k]]}) {
        const auto y = static_cast<std::size_t>(img);
        if (relabel[y] == -1) {
          relabel[y] = static_cast<int>(seq.size());
          seq.push_back(y);
        }
      }
    }
  }
  std::vector<int> data(seq.size() * 2 * gens);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    for (std::size_t g = 0; g < gens; ++g) {
      data[k * 2 * gens + 2 * g] = relabel[static_cast<std::size_t>(perms[g][seq[k]])];
      data[k * 2 * gens + 2 * g + 1] = relabel[static_cast<std::size_t>(inv[g][seq[k]])];
    }
  }
  return CosetTable(static_cast<int>(gens), std::move(data), EnumerationStatus::Complete,
                    EnumerationStats{seq.size(), seq.size(), 0});
}

CosetTable abelianization_kernel_table(const Presentation& p) {
  const AbelianizationMap am(p);
  if (!am.invariants().is_finite()) throw std::domain_error("abelianization is infinite");
  const auto& torsion = am.invariants().torsion;
  std::size_t n = 1;
  for (const auto& d : torsion) n *= d.get_ui();
  auto encode = [&](const std::vector<mpz_class>& v) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < torsion.size(); ++i) code = code * torsion[i].get_ui() + v[i].get_ui();
    return code;
  };
  auto decode = [&](std::size_t code) {
    std::vector<mpz_class> v(torsion.size());
    for (std::size_t i = torsion.size(); i-- > 0;) {
      v[i] = static_cast<unsigned long>(code % torsion[i].get_ui());
      code /= torsion[i].get_ui();
    }
    return v;
  };
  std::vector<std::vector<int>> perms;
  for (int g = 0; g < p.generators(); ++g) {
    const auto step = am.image({gen_letter(g)});
    std::vector<int> perm(n);
    for (std::size_t x = 0; x < n; ++x) {
      auto v = decode(x);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + step[i]) % torsion[i];
      perm[x] = static_cast<int>(encode(v));
    }
    perms.push_back(std::move(perm));
  }
  return coset_table_from_action(perms);
}

bool table_is_closed(const CosetTable& t, const Presentation& p) {
  if (!t.complete()) return false;
  for (std::size_t c = 0; c < t.index(); ++c) {
    for (int g = 0; g < t.generators(); ++g) {
      const int d = t.act(c, gen_letter(g));
      if (d < 0 || t.act(static_cast<std::size_t>(d), gen_letter(g, true)) != static_cast<int>(c)) return false;
    }
    for (const auto& r : p.relators())
      if (t.act(c, r) != static_cast<int>(c)) return false;
  }
  return true;
}

SchreierResult reidemeister_schreier(const Presentation& p, const CosetTable& t) {
  if (!t.complete()) throw std::logic_error("Reidemeister-Schreier needs a complete coset table");
  const std::size_t n = t.index();
  const int gens = p.generators();

  // BFS spanning tree; tree_edge marks (coset, column) pairs in the tree.
  std::vector<Word> rep(n);
  std::vector<bool> seen(n, false);
  std::set<std::pair<std::size_t, std::size_t>> tree;
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (int g = 0; g < gens; ++g) {
      for (bool inverse : {false, true}) {
        const Letter l = gen_letter(g, inverse);
        const auto d = static_cast<std::size_t>(t.act(c, l));
        if (seen[d]) continue;
        seen[d] = true;
        rep[d] = rep[c];
        rep[d].push_back(l);
        tree.insert({c, CosetTable::column(l)});
        tree.insert({d, CosetTable::column(-l)});
        queue.push_back(d);
      }
    }
  }

  // Schreier generator for each non-tree (coset, generator) pair.
  std::map<std::pair<std::size_t, int>, int> sgen;
  SchreierResult out;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < n; ++c) {
    for (int g = 0; g < gens; ++g) {
      const Letter l = gen_letter(g);
      if (tree.count({c, CosetTable::column(l)})) continue;
      const auto d = static_cast<std::size_t>(t.act(c, l));
      sgen[{c, g}] = static_cast<int>(names.size());
      names.push_back("s" + std::to_string(names.size()));
      Word w = rep[c];
      w.push_back(l);
      out.generator_words.push_back(concat(w, inverse_word(rep[d])));
    }
  }

  auto rewrite = [&](std::size_t c, const Word& w) {
    Word res;
    for (Letter l : w) {
      const int g = letter_gen(l);
      if (!letter_is_inverse(l)) {
        auto it = sgen.find({c, g});
        if (it != sgen.end()) res.push_back(gen_letter(it->second));
        c = static_cast<std::size_t>(t.act(c, l));
      } else {
        const auto d = static_cast<std::size_t>(t.act(c, l));
        auto it = sgen.find({d, g});
        if (it != sgen.end()) res.push_back(gen_letter(it->second, true));
        c = d;
      }
    }
    return free_reduce(res);
  };

  std::set<Word> rels;
  std::vector<Word> ordered;
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& r : p.relators()) {
      Word w = cyclic_reduce(rewrite(c, r));
      if (!w.empty() && rels.insert(w).second) ordered.push_back(w);
    }
  }
  out.presentation = Presentation(names, ordered, p.name().empty() ? std::string{} : p.name() + "-schreier");
  out.transversal = std::move(rep);
  return out;
}

}  // namespace picard
