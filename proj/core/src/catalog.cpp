#include "picard/catalog.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace picard {

namespace {

Mat2 lit2(Ring r, std::initializer_list<const char*> e) {
  Mat2 m(r);
  std::size_t k = 0;
  for (const char* s : e) {
    m(k / 2, k % 2) = QuadInt::parse(r, s);
    ++k;
  }
  return m;
}

Mat3 lit3(Ring r, std::initializer_list<const char*> e) {
  Mat3 m(r);
  std::size_t k = 0;
  for (const char* s : e) {
    m(k / 3, k % 3) = QuadInt::parse(r, s);
    ++k;
  }
  return m;
}

Mat3 cayley_j(Ring r) { return lit3(r, {"1", "1", "0", "0", "1", "-1", "1", "1", "-1"}); }
Mat3 cayley_j_inv(Ring r) { return lit3(r, {"0", "-1", "1", "1", "1", "-1", "1", "0", "-1"}); }

Mat3 antidiag_involution(Ring r) { return lit3(r, {"0", "0", "1", "0", "-1", "0", "1", "0", "0"}); }

}  // namespace

Mat3 embed(int slot, const Mat2& m) {
  if (slot != 1 && slot != 2) throw std::invalid_argument("embedding slot must be 1 or 2");
  if (!preserves_disk_form(m)) throw std::invalid_argument("matrix does not preserve Diag(1,-1)");
  Mat3 out = Mat3::identity(m.ring());
  const std::size_t p = slot == 1 ? 0 : 1;
  out(p, p) = m(0, 0);
  out(p, 2) = m(0, 1);
  out(2, p) = m(1, 0);
  out(2, 2) = m(1, 1);
  return out;
}

Mat3 cayley(const Mat3& m) { return cayley_j_inv(m.ring()) * m * cayley_j(m.ring()); }
Mat3 cayley_inverse(const Mat3& m) { return cayley_j(m.ring()) * m * cayley_j_inv(m.ring()); }

const Mat2& FuchsianGens::operator[](std::string_view name) const {
  for (const auto& g : gens)
    if (g.name == name) return g.m;
  throw UnknownName("no Fuchsian generator named " + std::string(name));
}

FuchsianGens fuchsian_generators(int d) {
  const Ring r = ring_from_d(d);
  FuchsianGens f{r, {}};
  switch (r) {
    case Ring::Eisenstein: {
      // R = diag(-w^2, 1), U = [[1+i√3, -i√3], [i√3, 1-i√3]], E = w^2 R^-2
      const Mat2 R = lit2(r, {"1+w", "0", "0", "1"});
      const Mat2 U = lit2(r, {"2+2*w", "-1-2*w", "1+2*w", "-2*w"});
      const Mat2 E = R.pow(-2).scaled(QuadInt::parse(r, "-1-w"));
      f.gens = {{"R", R}, {"U", U}, {"E", E}};
      break;
    }
    case Ring::Gauss: {
      const Mat2 R = lit2(r, {"i", "0", "0", "1"});
      const Mat2 U = lit2(r, {"1+i", "-1*i", "i", "1-i"});
      const Mat2 E = R.pow(-2).scaled(QuadInt::tau(r));
      f.gens = {{"R", R}, {"U", U}, {"E", E}};
      break;
    }
    case Ring::Seven: {
      const Mat2 U = lit2(r, {"2*t7", "1-2*t7", "-1+2*t7", "2-2*t7"});
      const Mat2 A = lit2(r, {"-1+t7", "1", "-1", "t7"});
      const Mat2 B = lit2(r, {"-1", "0", "0", "1"});
      f.gens = {{"U", U}, {"A", A}, {"B", B}};
      break;
    }
  }
  return f;
}

Variant parse_variant(std::string_view s) {
  if (s == "plain") return Variant::Plain;
  if (s == "primed") return Variant::Primed;
  throw std::invalid_argument("variant must be plain or primed, got " + std::string(s));
}

std::string_view to_string(Variant v) { return v == Variant::Plain ? "plain" : "primed"; }

const Mat3& HybridGens::operator[](std::string_view name) const {
  for (const auto& g : gens)
    if (g.name == name) return g.m;
  throw UnknownName("no hybrid generator named " + std::string(name));
}

std::vector<std::string> HybridGens::names() const {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.name);
  return out;
}

std::vector<Mat3> HybridGens::matrices() const {
  std::vector<Mat3> out;
  for (const auto& g : gens) out.push_back(g.m);
  return out;
}

namespace {

void require_literal(const std::string& name, const Mat3& built, const Mat3& literal) {
  if (built != literal) {
    throw std::logic_error("constructed " + name + " = " + built.to_string() +
                           " differs from the stored literal " + literal.to_string());
  }
}

const PicardGroup& build_picard(Ring r);

}  // namespace

HybridGens hybrid_generators(int d, Variant v) {
  const Ring r = ring_from_d(d);
  const FuchsianGens f = fuchsian_generators(d);
  HybridGens h{r, v, {}, {}};
  auto add = [&](const std::string& name, const Mat3& built, const Mat3& literal) {
    require_literal(name, built, literal);
    h.gens.push_back({name, built});
  };
  const Mat2 minus_id = Mat2::identity(r).scaled(QuadInt(r, -1));

  switch (r) {
    case Ring::Eisenstein: {
      add("E1", cayley(embed(1, f["E"])),
          lit3(r, {"-1-w", "-2-w", "2+w", "1+2*w", "2+2*w", "-2-w", "1+2*w", "1+2*w", "-1-w"}));
      add("U1", cayley(embed(1, f["U"])), lit3(r, {"1", "0", "1+2*w", "0", "1", "0", "0", "0", "1"}));
      add("U2", cayley(embed(2, f["U"])), lit3(r, {"1", "0", "0", "0", "1", "0", "1+2*w", "0", "1"}));
      add("E2", cayley(embed(2, f["E"])),
          lit3(r, {"-1-w", "-1-2*w", "1+2*w", "2+w", "2+2*w", "-1-2*w", "2+w", "2+w", "-1-w"}));
      const Mat3 i1 = cayley(embed(1, minus_id));
      const Mat3 i2 = cayley(embed(2, minus_id));
      h.gens.push_back({"I1", i1});
      h.gens.push_back({"I2", i2});
      if (v == Variant::Primed) {
        const auto& pg = build_picard(r);
        const Mat3 e1p = evaluate(parse_word("P^2 R Q^2 P^-2", pg.presentation.generator_names()), pg.realization, r);
        h.gens.push_back({"E1p", e1p});
      }
      break;
    }
    case Ring::Gauss: {
      add("E1", cayley(embed(1, f["E"])),
          lit3(r, {"i", "-1+i", "1-i", "-2*i", "1-2*i", "-1+i", "-2*i", "-2*i", "i"}));
      add("U1", cayley(embed(1, f["U"])), lit3(r, {"1", "0", "i", "0", "1", "0", "0", "0", "1"}));
      add("E2", cayley(embed(2, f["E"])),
          lit3(r, {"i", "2*i", "-2*i", "1-i", "1-2*i", "2*i", "1-i", "1-i", "i"}));
      add("U2", cayley(embed(2, f["U"])), lit3(r, {"1", "0", "0", "0", "1", "0", "i", "0", "1"}));
      const auto& pg = build_picard(r);
      const auto& names = pg.presentation.generator_names();
      const Mat3 u2_word = evaluate(parse_word("I0 T I0", names), pg.realization, r);
      h.corrections.push_back({"U2 as a word in I0, Q, T", "U2 = I0 U2 I0", "U2 = I0 T I0",
                               proj_eq(u2_word, h["U2"])});
      if (v == Variant::Primed) {
        h.gens.push_back({"R1", cayley(embed(1, f["R"]))});
        h.gens.push_back({"R2", cayley(embed(2, f["R"]))});
      }
      break;
    }
    case Ring::Seven: {
      if (v == Variant::Primed) throw std::invalid_argument("no primed hybrid variant for d = 7");
      add("U1", cayley(embed(1, f["U"])), lit3(r, {"1", "0", "-1+2*t7", "0", "1", "0", "0", "0", "1"}));
      add("U2", cayley(embed(2, f["U"])), lit3(r, {"1", "0", "0", "0", "1", "0", "-1+2*t7", "0", "1"}));
      add("A1", cayley(embed(1, f["A"])),
          lit3(r, {"-1+t7", "-2+t7", "1-t7", "1", "2", "-2+t7", "1", "1", "-1+t7"}));
      add("A2", cayley(embed(2, f["A"])),
          lit3(r, {"-1+t7", "-1", "1", "2-t7", "2", "-1", "1-t7", "2-t7", "-1+t7"}));
      add("B1", cayley(embed(1, f["B"])), lit3(r, {"1", "0", "0", "-2", "-1", "0", "-2", "-2", "1"}));
      const Mat3 b2_literal = lit3(r, {"1", "2", "-2", "0", "-1", "2", "0", "0", "1"});
      const Mat3 b2 = cayley(embed(2, f["B"]));
      add("B2", b2, b2_literal);
      h.corrections.push_back({"B2 construction", "B2 = J^-1 i2(U) J", "B2 = J^-1 i2(B) J",
                               b2 == b2_literal && cayley(embed(2, f["U"])) != b2_literal});
      break;
    }
  }
  return h;
}

Mat3 evaluate(const Word& w, const std::vector<Mat3>& gens, Ring r) {
  Mat3 acc = Mat3::identity(r);
  std::vector<std::optional<Mat3>> inverses(gens.size());
  for (Letter l : w) {
    const auto g = static_cast<std::size_t>(letter_gen(l));
    if (letter_is_inverse(l)) {
      if (!inverses[g]) inverses[g] = gens.at(g).inverse();
      acc = acc * *inverses[g];
    } else {
      acc = acc * gens.at(g);
    }
  }
  return acc;
}

namespace {

const PicardGroup& build_picard(Ring r) {
  static std::once_flag once;
  static std::map<Ring, PicardGroup> groups;
  std::call_once(once, [] {
    {
      const Ring e = Ring::Eisenstein;
      PicardGroup g{e,
                    Presentation::from_expressions({"P", "Q", "R"},
                                                   {"R^2", "(Q P^-1)^6", "P Q^-1 R Q P^-1 R", "P^3 Q^-2", "(R P)^3"},
                                                   "picard-3"),
                    {lit3(e, {"1", "1", "w", "0", "w", "-1*w", "0", "0", "1"}),
                     lit3(e, {"1", "1", "w", "0", "-1", "1", "0", "0", "1"}), antidiag_involution(e)}};
      groups.emplace(e, std::move(g));
    }
    {
      const Ring gr = Ring::Gauss;
      PicardGroup g{gr,
                    Presentation::from_expressions(
                        {"I0", "Q", "T"},
                        {"I0^2", "Q^2", "(I0 Q)^3", "(I0 T)^12", "(I0 Q T)^8", "[(I0 T)^3, T]", "[Q, T]"},
                        "picard-1"),
                    {antidiag_involution(gr), lit3(gr, {"1", "1-i", "-1", "0", "-1", "1+i", "0", "0", "1"}),
                     lit3(gr, {"1", "0", "i", "0", "1", "0", "0", "0", "1"})}};
      groups.emplace(gr, std::move(g));
    }
    {
      const Ring s = Ring::Seven;
      // T = T1, t = T1^-1
      const std::vector<std::string> compact = {
          "RR", "II", "RIRI", "RtRTRTRt", "TItRTItRTItRTItR", "tITRtITRtITRtITR", "tItITITItttITITItIt",
          "tITITItItItITITItItI", "ItRItRItRItRItRItRItR", "tITITIttItITITTItItITI",
          "tITITIRTIRTITItItITRtIRtI", "RTIRTITItItIRtIRtItITITIt", "RTIRTRtITITIRTITItRTRITRtITITITIt"};
      std::vector<Word> rels;
      for (const auto& c : compact) {
        Word w;
        for (char ch : c) {
          switch (ch) {
            case 'T': w.push_back(gen_letter(0)); break;
            case 't': w.push_back(gen_letter(0, true)); break;
            case 'R': w.push_back(gen_letter(1)); break;
            case 'I': w.push_back(gen_letter(2)); break;
            default: throw std::logic_error("bad relator letter");
          }
        }
        rels.push_back(w);
      }
      PicardGroup g{s, Presentation({"T1", "R", "I"}, rels, "picard-7"),
                    {lit3(s, {"1", "-1", "-1+t7", "0", "1", "1", "0", "0", "1"}),
                     lit3(s, {"1", "0", "0", "0", "-1", "0", "0", "0", "1"}), antidiag_involution(s)}};
      groups.emplace(s, std::move(g));
    }
  });
  return groups.at(r);
}

}  // namespace

const PicardGroup& picard_group(int d) { return build_picard(ring_from_d(d)); }

Catalog::Catalog(int d)
    : ring_(ring_from_d(d)),
      plain_(hybrid_generators(d, Variant::Plain)),
      primed_(ring_ == Ring::Seven ? plain_ : hybrid_generators(d, Variant::Primed)),
      has_primed_(ring_ != Ring::Seven) {
  const auto& pg = picard();
  for (int g = 0; g < pg.presentation.generators(); ++g) {
    names_.push_back(pg.presentation.generator_names()[static_cast<std::size_t>(g)]);
    mats_.push_back(pg.realization[static_cast<std::size_t>(g)]);
  }
  for (const auto& g : primed_.gens) {
    names_.push_back(g.name);
    mats_.push_back(g.m);
  }
}

const HybridGens& Catalog::hybrid(Variant v) const {
  if (v == Variant::Primed && !has_primed_) throw std::invalid_argument("no primed hybrid variant for d = 7");
  return v == Variant::Plain ? plain_ : primed_;
}

const Mat3& Catalog::matrix(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return mats_[i];
  throw UnknownName("no matrix named " + std::string(name) + " for d = " + std::to_string(d()));
}

Mat3 Catalog::eval(std::string_view expr) const {
  return evaluate(parse_word(expr, names_), mats_, ring_);
}

const Catalog& catalog(int d) {
  static const Catalog c1(1);
  static const Catalog c3(3);
  static const Catalog c7(7);
  switch (ring_from_d(d)) {
    case Ring::Gauss: return c1;
    case Ring::Eisenstein: return c3;
    case Ring::Seven: return c7;
  }
  throw UnsupportedRing(d);
}

bool verify_identity(const Identity& id) {
  const Catalog& c = catalog(id.d);
  return proj_eq(c.eval(id.lhs), c.eval(id.rhs));
}

bool verify_word_identity(int d, const Word& lhs, const Mat3& rhs) {
  const auto& pg = picard_group(d);
  return proj_eq(evaluate(lhs, pg.realization, pg.ring), rhs);
}

namespace {

const char* kE1WordGauss = "T^-1 Q (I0 T)^3 I0 (T (I0 T)^-3 Q)^2 I0";
const char* kE2WordGauss = "I0 T^-1 Q (I0 T)^3 I0 (T (I0 T)^-3 Q)^2";

}  // namespace

std::vector<Identity> word_identities(int d) {
  switch (ring_from_d(d)) {
    case Ring::Eisenstein:
      return {{3, "words", "Q^2", "U1", ""},
              {3, "words", "R Q^2 R", "U2", ""},
              {3, "words", "P^2 (R Q^2)^2 P^-2", "E1", ""}};
    case Ring::Gauss:
      return {{1, "words", "T", "U1", ""},
              {1, "words", "I0 T I0", "U2", "printed as U2 = I0 U2 I0"},
              {1, "words", kE1WordGauss, "E1", ""},
              {1, "words", kE2WordGauss, "E2", "I0 E1 I0 with I0^2 cancelled"}};
    case Ring::Seven:
      return {{7, "words", "(R T1)^2", "U1", ""},
              {7, "words", "I (R T1)^2 I", "U2", ""},
              {7, "words", "T1 I T1 R", "A1", ""},
              {7, "words", "I T1 I T1 R I", "A2", ""},
              {7, "words", "(I T1) R (I T1)^-1", "B1", ""},
              {7, "words", "I (I T1) R (I T1)^-1 I", "B2", ""}};
  }
  return {};
}

std::vector<Identity> normality_identities(int d) {
  switch (ring_from_d(d)) {
    case Ring::Eisenstein:
      return {{3, "normality", "P^-1 U1 P", "U1", ""},
              {3, "normality", "Q^-1 U1 Q", "U1", ""},
              {3, "normality", "R^-1 U1 R", "U2", ""},
              {3, "normality", "P^-1 U2 P", "U1^-1 E1", ""},
              {3, "normality", "Q^-1 U2 Q", "U1^-1 E1", ""},
              {3, "normality", "R^-1 U2 R", "U1", ""},
              {3, "normality", "P^-1 E1 P", "U2^-1 E1^-1 U1", ""},
              {3, "normality", "Q^-1 E1 Q", "U2 U1", ""},
              {3, "normality", "R^-1 E1 R", "E1^-1", ""}};
    case Ring::Gauss:
      return {{1, "normality", "Q^-1 U1 Q", "U1", ""},
              {1, "normality", "Q^-1 U2 Q", "(U1 E1) U2 (U1 E1)^-1", ""},
              {1, "normality", "Q^-1 E1 Q", "(U2 U1) E2 (U2 U1)^-1", ""},
              {1, "normality", "Q^-1 E2 Q", "(U2 U1) E1 (U2 U1)^-1", ""},
              {1, "normality", "I0 U1 I0", "U2", "I0 pairing"},
              {1, "normality", "I0 U2 I0", "U1", "I0 pairing"},
              {1, "normality", "I0 E1 I0", "E2", "I0 pairing"},
              {1, "normality", "I0 E2 I0", "E1", "I0 pairing"},
              {1, "normality", "T", "U1", "T lies in the hybrid"}};
    case Ring::Seven:
      return {{7, "normality", "R", "(A1 A2 B1 A1 B2)^-1 B1 (A1 A2 B1 A1 B2)", "R lies in the hybrid"},
              {7, "normality", "T1^-1 A1 T1", "(A1 A2^-1 B2 A2^-1 A1)^-1 A2 (A1 A2^-1 B2 A2^-1 A1)", ""},
              {7, "normality", "T1^-1 A2 T1", "(B2 A2 A1^-1 A2^-1 B1)^-1 A2 (B2 A2 A1^-1 A2^-1 B1)", ""},
              {7, "normality", "T1^-1 B1 T1", "(A1^-1 A2^-1 B1)^-1 B1 (A1^-1 A2^-1 B1)", ""},
              {7, "normality", "T1^-1 B2 T1", "R", ""},
              {7, "normality", "T1^-1 U1 T1", "U1", ""},
              {7, "normality", "T1^-1 U2 T1", "(A1^2 A2^-1 B2 A2^-1 A1)^-1 U2 (A1^2 A2^-1 B2 A2^-1 A1)", ""},
              {7, "normality", "I U1 I", "U2", "I pairing"},
              {7, "normality", "I A1 I", "A2", "I pairing"},
              {7, "normality", "I B1 I", "B2", "I pairing"}};
  }
  return {};
}

std::vector<Identity> relation_identities(int d) {
  if (ring_from_d(d) != Ring::Eisenstein) return {};
  return {{3, "relations", "E1^3", "1", ""},
          {3, "relations", "(U1 U2)^3", "1", ""},
          {3, "relations", "(E1 U1^-1 U2)^3", "1", ""},
          {3, "relations", "(E1 U2 U1^-1)^3", "1", ""},
          {3, "relations", "(E1^-1 U1 U2^-1)^3", "1", ""},
          {3, "relations", "(E1^-1 U2^-1 U1)^3", "1", ""}};
}

std::vector<std::pair<std::string, std::string>> hybrid_words(int d, Variant v) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& id : word_identities(d)) out.emplace_back(id.rhs, id.lhs);
  if (v == Variant::Primed) {
    switch (ring_from_d(d)) {
      case Ring::Eisenstein:
        // H'(3) = <E1p, U1, U2>
        out = {{"E1p", "P^2 R Q^2 P^-2"}, {"U1", "Q^2"}, {"U2", "R Q^2 R"}};
        break;
      case Ring::Gauss:
        out.emplace_back("R1", "(T^-1 I0 Q)^2");
        out.emplace_back("R2", "I0 (T^-1 I0 Q)^2 I0");
        break;
      case Ring::Seven:
        throw std::invalid_argument("no primed hybrid variant for d = 7");
    }
  }
  return out;
}

Presentation hybrid_quotient(int d, Variant v) {
  const auto& pg = picard_group(d);
  std::vector<Word> extra;
  for (const auto& [name, expr] : hybrid_words(d, v)) extra.push_back(parse_word(expr, pg.presentation.generator_names()));
  Presentation q = quotient_by_normal_gens(pg.presentation, extra);
  return Presentation(q.generator_names(), q.relators(),
                      pg.presentation.name() + "-mod-hybrid" + (v == Variant::Primed ? "-primed" : ""));
}

Presentation triangle_quotient_presentation() {
  return Presentation::from_expressions({"a", "b", "c"}, {"c^2", "a^6", "[a,c]", "(a b)^3", "(c a b)^3", "b^2"},
                                        "G");
}

TietzeSubstitution triangle_quotient_substitution() {
  const std::vector<std::string> src = {"P", "Q", "R"};
  const std::vector<std::string> dst = {"a", "b", "c"};
  return {{parse_word("a b", dst), parse_word("b", dst), parse_word("c", dst)},
          {parse_word("P Q^-1", src), parse_word("Q", src), parse_word("R", src)}};
}

std::vector<std::string> commutator_subgroup_words() {
  return {"R", "P^3", "Q^2", "[P,Q]", "[P,R]", "[Q,R]"};
}

std::string catalog_dump(int d) {
  const Catalog& c = catalog(d);
  std::ostringstream os;
  os << "# ring O_" << d << ", tau = " << tau_symbol(c.ring()) << "\n\n## Fuchsian generators (disk model)\n";
  for (const auto& g : fuchsian_generators(d).gens) os << g.name << " = " << g.m.to_string() << "\n";
  os << "\n## Hybrid generators (Siegel model)\n";
  for (const auto& g : c.hybrid(c.ring() == Ring::Seven ? Variant::Plain : Variant::Primed).gens)
    os << g.name << " = " << g.m.to_string() << "\n";
  for (const auto& corr : c.hybrid().corrections)
    os << "# correction: " << corr.item << ": printed '" << corr.printed << "', used '" << corr.used
       << "', verified " << (corr.verified ? "yes" : "no") << "\n";
  const auto& pg = c.picard();
  os << "\n## Picard generators\n";
  for (std::size_t i = 0; i < pg.realization.size(); ++i)
    os << pg.presentation.generator_names()[i] << " = " << pg.realization[i].to_string() << "\n";
  os << "\n## Presentation " << pg.presentation.name() << "\n";
  for (const auto& r : pg.presentation.relators()) os << render_word(r, pg.presentation.generator_names()) << "\n";
  os << "\n## Hybrid generator words\n";
  for (const auto& [name, expr] : hybrid_words(d)) os << name << " = " << expr << "\n";
  return os.str();
}

}  // namespace picard
