#include "picard/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace picard {

namespace {

struct Step {
  Letter letter;
  Mat3 forward;   // matrix of the letter
  Mat3 backward;  // its inverse
};

struct Node {
  Word word;
  Mat3 m;
};

// One side of the search: level sets with exact distances and, per element,
// the least word of that length.
class Side {
 public:
  Side(const Mat3& start, bool prepend) : prepend_(prepend) {
    const std::string k = canonical_key(start);
    dist_.emplace(k, 0);
    levels_.push_back({{k, Node{{}, start}}});
  }

  int radius() const { return static_cast<int>(levels_.size()) - 1; }
  bool stalled() const { return levels_.back().empty(); }
  const std::map<std::string, Node>& level(int k) const { return levels_[static_cast<std::size_t>(k)]; }
  const std::unordered_map<std::string, int>& dist() const { return dist_; }

  // Forward words grow on the right (m * letter); backward words grow on
  // the left, with the element multiplied by the letter's inverse.
  void expand(const std::vector<Step>& steps, std::size_t height_bound, std::size_t& pruned) {
    const auto& cur = levels_.back();
    std::vector<const Node*> order;
    for (const auto& [k, n] : cur) order.push_back(&n);
    std::sort(order.begin(), order.end(), [](const Node* a, const Node* b) { return a->word < b->word; });

    std::map<std::string, Node> next;
    auto visit = [&](const Node& n, const Step& s) {
      Mat3 m = prepend_ ? n.m * s.backward : n.m * s.forward;
      m = canonical_rep(m);
      if (m.height_bits() > height_bound) {
        ++pruned;
        return;
      }
      std::string k = canonical_key(m);
      if (dist_.count(k)) return;
      Word w;
      if (prepend_) {
        w.push_back(s.letter);
        w.insert(w.end(), n.word.begin(), n.word.end());
      } else {
        w = n.word;
        w.push_back(s.letter);
      }
      auto it = next.find(k);
      if (it == next.end()) {
        next.emplace(std::move(k), Node{std::move(w), std::move(m)});
      } else if (w < it->second.word) {
        it->second.word = std::move(w);
      }
    };
    if (prepend_) {
      for (const auto& s : steps)
        for (const Node* n : order) visit(*n, s);
    } else {
      for (const Node* n : order)
        for (const auto& s : steps) visit(*n, s);
    }
    const int d = radius() + 1;
    for (const auto& [k, n] : next) dist_.emplace(k, d);
    levels_.push_back(std::move(next));
  }

 private:
  bool prepend_;
  std::unordered_map<std::string, int> dist_;
  std::vector<std::map<std::string, Node>> levels_;
};

// Letter order key: g0, g0^-1, g1, g1^-1, ...
int letter_rank(Letter l) { return 2 * letter_gen(l) + (letter_is_inverse(l) ? 1 : 0); }

}  // namespace

SearchResult find_word(const Mat3& target, const std::vector<Named3>& gens, const SearchConfig& cfg) {
  if (gens.empty()) throw std::invalid_argument("find_word needs at least one generator");
  if (cfg.max_depth < 0 || cfg.max_height_bits == 0) throw std::invalid_argument("search bounds must be positive");
  const Ring r = target.ring();
  std::vector<std::string> names;
  std::vector<Mat3> mats;
  for (const auto& g : gens) {
    if (g.m.ring() != r) throw RingMismatch();
    names.push_back(g.name);
    mats.push_back(g.m);
  }

  // Letters in rank order; an inverse equal to its generator is dropped.
  std::vector<Step> steps;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Mat3 inv = gens[i].m.inverse();
    steps.push_back({gen_letter(static_cast<int>(i)), gens[i].m, inv});
    if (!proj_eq(inv, gens[i].m)) steps.push_back({gen_letter(static_cast<int>(i), true), inv, gens[i].m});
  }
  SearchResult res;
  const bool bidi = cfg.direction == SearchDirection::Bidirectional;
  Side fwd(Mat3::identity(r), false);
  Side bwd(canonical_rep(target), true);
  const std::string target_key = canonical_key(target);

  // Words are searched over rank+1 so that std::vector<int> order is the letter order.
  std::vector<Step> ranked = steps;
  for (auto& s : ranked) s.letter = letter_rank(s.letter) + 1;
  auto unrank = [](const Word& w) {
    Word out;
    for (Letter l : w) out.push_back(gen_letter((l - 1) / 2, (l - 1) % 2 == 1));
    return out;
  };

  auto finish = [&](const Word& ranked_word) {
    res.found = true;
    res.word = unrank(ranked_word);
    res.rendered = render_word(res.word, names);
    res.verified = proj_eq(evaluate(res.word, mats, r), target);
    if (!res.verified) throw std::logic_error("search returned a word that does not evaluate to the target");
    res.visited = fwd.dist().size() + (bidi ? bwd.dist().size() : 0);
    return res;
  };

  for (;;) {
    // Shortest total length among meetings of the explored balls.
    int best = -1;
    if (bidi) {
      const auto& small = fwd.dist().size() <= bwd.dist().size() ? fwd.dist() : bwd.dist();
      const auto& large = &small == &fwd.dist() ? bwd.dist() : fwd.dist();
      for (const auto& [k, d1] : small) {
        auto it = large.find(k);
        if (it != large.end() && (best < 0 || d1 + it->second < best)) best = d1 + it->second;
      }
    } else if (fwd.dist().count(target_key)) {
      best = fwd.dist().at(target_key);
    }
    if (best >= 0) {
      const int split = std::min(fwd.radius(), best);
      const auto& fl = fwd.level(split);
      const auto& bl = bwd.level(bidi ? best - split : 0);
      Word answer;
      bool have = false;
      for (const auto& [k, n] : fl) {
        if (!bidi && k != target_key) continue;
        auto it = bl.find(k);
        if (it == bl.end()) continue;
        Word w = n.word;
        w.insert(w.end(), it->second.word.begin(), it->second.word.end());
        if (!have || w < answer) {
          answer = std::move(w);
          have = true;
        }
      }
      if (!have) throw std::logic_error("search meeting bookkeeping failed");
      return finish(answer);
    }
    const int explored = fwd.radius() + (bidi ? bwd.radius() : 0);
    if (explored >= cfg.max_depth) {
      res.exhausted = res.pruned ? "height" : "depth";
      break;
    }
    if (fwd.stalled() || (bidi && bwd.stalled())) {
      res.exhausted = res.pruned ? "height" : "exhausted";
      break;
    }
    if (!bidi || fwd.dist().size() <= bwd.dist().size()) {
      fwd.expand(ranked, cfg.max_height_bits, res.pruned);
    } else {
      bwd.expand(ranked, cfg.max_height_bits, res.pruned);
    }
  }
  res.visited = fwd.dist().size() + (bidi ? bwd.dist().size() : 0);
  return res;
}

SearchResult conjugate_membership(const Mat3& g, const Mat3& h, const std::vector<Named3>& subgens,
                                  const SearchConfig& cfg) {
  return find_word(g.inverse() * h * g, subgens, cfg);
}

}  // namespace picard
