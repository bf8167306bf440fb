#include "picard/certify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace picard {

namespace {

CheckResult make(std::string scope, std::string id, std::string claim, bool ok, std::string detail = {},
                 std::vector<Witness> witnesses = {}) {
  return CheckResult{std::move(scope), std::move(id), std::move(claim), ok ? Status::Pass : Status::Fail,
                     std::move(detail), std::move(witnesses)};
}

bool all_pass(const std::vector<CheckResult>& v) {
  return std::all_of(v.begin(), v.end(), [](const CheckResult& c) { return c.status == Status::Pass; });
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

const std::vector<std::string> kScopes = {"forms",          "words",          "normality",
                                          "relations",      "sign-extension", "classification",
                                          "abelianization", "search",         "index",
                                          "primed"};

}  // namespace

const std::vector<std::string>& scope_ids() { return kScopes; }

bool scope_applies(std::string_view scope, int d) {
  ring_from_d(d);
  if (scope == "all") return true;
  if (std::find(kScopes.begin(), kScopes.end(), scope) == kScopes.end()) return false;
  if (scope == "relations" || scope == "sign-extension" || scope == "abelianization") return d == 3;
  if (scope == "primed") return d != 7;
  return true;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> check_forms(int d) {
  std::vector<CheckResult> out;
  const Catalog& c = catalog(d);
  const Ring r = c.ring();
  for (const auto& g : fuchsian_generators(d).gens) {
    out.push_back(make("forms", "disk-form:" + g.name, g.name + " preserves Diag(1,-1)", preserves_disk_form(g.m), {},
                       {{"matrix", g.m.to_string()}}));
  }
  const HermForm siegel = HermForm::siegel(r);
  const HybridGens& h = c.hybrid(r == Ring::Seven ? Variant::Plain : Variant::Primed);
  for (const auto& g : h.gens) {
    out.push_back(make("forms", "siegel-form:" + g.name, g.name + " preserves the Siegel form",
                       is_unitary(g.m, siegel), {}, {{"matrix", g.m.to_string()}}));
  }
  const auto& pg = c.picard();
  const auto& names = pg.presentation.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    out.push_back(make("forms", "siegel-form:" + names[i], names[i] + " preserves the Siegel form",
                       is_unitary(pg.realization[i], siegel), {}, {{"matrix", pg.realization[i].to_string()}}));
  }
  for (const auto& rel : pg.presentation.relators()) {
    const std::string text = render_word(rel, names);
    const Mat3 m = evaluate(rel, pg.realization, r);
    out.push_back(make("forms", "relator:" + text, "relator " + text + " is a unit multiple of Id",
                       proj_eq(m, Mat3::identity(r))));
  }
  for (const auto& corr : h.corrections) {
    out.push_back(make("forms", "correction:" + corr.item, "realized as '" + corr.used + "'", corr.verified,
                       "printed as '" + corr.printed + "'; the used form matches the displayed matrix"));
  }
  if (r == Ring::Eisenstein) {
    out.push_back(make("forms", "E2~E1^-1", "E2 = w E1^-1", proj_eq(c.matrix("E2"), c.matrix("E1").inverse())));
  }
  if (r == Ring::Seven) {
    const Mat2 minus_id = Mat2::identity(r).scaled(QuadInt(r, -1));
    const Mat3 lhs = embed(1, minus_id);
    const Mat3 rhs = embed(2, fuchsian_generators(7)["B"]);
    out.push_back(make("forms", "i1(-Id)~i2(B)", "i1(-Id) = i2(B) projectively", proj_eq(lhs, rhs),
                       lhs == rhs ? "equal exactly" : "equal up to the scalar -1"));
  }
  return out;
}

std::vector<CheckResult> check_identities(const std::vector<Identity>& ids) {
  std::vector<CheckResult> out;
  for (const auto& id : ids) {
    const std::string text = id.lhs + " ~ " + id.rhs;
    out.push_back(make(id.scope, text, text, verify_identity(id), id.note));
  }
  return out;
}

std::vector<CheckResult> verify_normality(int d) { return check_identities(normality_identities(d)); }

std::vector<CheckResult> sign_extension_checks() {
  std::vector<CheckResult> out;
  const Ring r = Ring::Eisenstein;
  const FuchsianGens f = fuchsian_generators(3);
  const Mat2& E = f["E"];
  const Mat2& U = f["U"];
  const Mat2 minus_id = Mat2::identity(r).scaled(QuadInt(r, -1));
  const Mat2 eue_inv = (E * U * E).inverse();
  for (int j : {1, 2}) {
    const int k = 3 - j;
    const Mat3 lhs = embed(j, minus_id) * embed(k, U) * embed(j, minus_id);
    const Mat3 rhs = embed(k, eue_inv);
    out.push_back(make("sign-extension", "i" + std::to_string(j) + "(-Id) conjugation",
                       "i" + std::to_string(j) + "(-Id) i" + std::to_string(k) + "(U) i" + std::to_string(j) +
                           "(-Id) = i" + std::to_string(k) + "((EUE)^-1)",
                       lhs == rhs, "exact matrix equality", {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}}));
  }
  std::vector<std::pair<std::string, Mat3>> diag = {{"i1(E)", embed(1, E)},
                                                    {"i2(E)", embed(2, E)},
                                                    {"i1(-Id)", embed(1, minus_id)},
                                                    {"i2(-Id)", embed(2, minus_id)}};
  bool commute = true;
  for (const auto& [n1, a] : diag)
    for (const auto& [n2, b] : diag) commute = commute && a * b == b * a;
  out.push_back(make("sign-extension", "diagonal-commute", "i_j(E) and i_j(-Id) commute pairwise", commute));
  bool same_slot = true;
  for (int j : {1, 2}) {
    const Mat3 s = embed(j, minus_id);
    same_slot = same_slot && s * embed(j, E) == embed(j, E) * s && s * embed(j, U) == embed(j, U) * s;
  }
  out.push_back(make("sign-extension", "same-slot-commute", "i_j(-Id) commutes with i_j(E) and i_j(U)", same_slot));
  const bool involutions = (embed(1, minus_id) * embed(1, minus_id)).is_identity() &&
                           (embed(2, minus_id) * embed(2, minus_id)).is_identity();
  out.push_back(make("sign-extension", "index-divides-4",
                     "the hybrid generated by i_j(E), i_j(U) is normal of index dividing 4",
                     all_pass(out) && involutions,
                     "quotient generated by the commuting involutions i1(-Id), i2(-Id)"));
  return out;
}

std::vector<CheckResult> check_classification(int d) {
  std::vector<CheckResult> out;
  const Catalog& c = catalog(d);
  auto cls = [&](const std::string& name, IsometryClass want, std::optional<long> order = std::nullopt) {
    const Mat3& m = c.matrix(name);
    const IsometryClass got = classify(m);
    const mpz_class f = goldman_discriminant(m.trace(), m.det());
    std::string claim = name + " is " + std::string(to_string(want));
    bool ok = got == want;
    std::vector<Witness> w = {{"class", std::string(to_string(got))}, {"discriminant", f.get_str()}};
    if (order) {
      const auto po = projective_order(m);
      claim += " of projective order " + std::to_string(*order);
      ok = ok && po == order;
      w.push_back({"projective order", po ? std::to_string(*po) : "none up to 64"});
    }
    out.push_back(make("classification", name, claim, ok, {}, std::move(w)));
  };
  cls("U1", IsometryClass::Unipotent2Step);
  cls("U2", IsometryClass::Unipotent2Step);
  switch (c.ring()) {
    case Ring::Eisenstein:
      cls("E1", IsometryClass::RegularElliptic, 3);
      cls("E2", IsometryClass::RegularElliptic, 3);
      break;
    case Ring::Gauss:
      cls("E1", IsometryClass::RegularElliptic, 4);
      cls("E2", IsometryClass::RegularElliptic, 4);
      break;
    case Ring::Seven:
      cls("A1", IsometryClass::Loxodromic);
      cls("A2", IsometryClass::Loxodromic);
      // B1, B2 are complex reflections: elliptic but not regular.
      cls("B1", IsometryClass::OtherBoundary, 2);
      cls("B2", IsometryClass::OtherBoundary, 2);
      out.push_back(make("classification", "inventory", "two elliptic and two loxodromic generators besides U1, U2",
                         all_pass(out)));
      break;
  }
  return out;
}

std::vector<CheckResult> hybrid_abelianization_bounds() {
  std::vector<CheckResult> out;
  const auto& pg = picard_group(3);
  const auto& names = pg.presentation.generator_names();
  const AbelianizationMap am(pg.presentation);
  const auto& inv = am.invariants();
  const bool z6 = inv.rank == 0 && inv.torsion == std::vector<mpz_class>{6};
  out.push_back(make("abelianization", "picard-3-ab", "the d = 3 Picard group has abelianization Z/3 x Z/2", z6, {},
                     {{"invariants", inv.to_string()}}));
  out.push_back(make("abelianization", "P-image", "P maps to an element of order 3",
                     am.order(parse_word("P", names)) == 3));

  bool vanish = true;
  std::vector<Witness> images;
  for (const auto& [name, expr] : hybrid_words(3, Variant::Primed)) {
    const bool t = am.is_trivial(parse_word(expr, names));
    vanish = vanish && t;
    images.push_back({name + " = " + expr, t ? "0" : "nonzero"});
  }
  out.push_back(make("abelianization", "primed-in-commutator",
                     "the generators E1p, U1, U2 of H'(3) vanish in the abelianization", vanish, {}, images));

  const CosetTable kernel = abelianization_kernel_table(pg.presentation);
  bool words_inside = true;
  for (const auto& w : commutator_subgroup_words()) words_inside = words_inside && kernel.act(0, parse_word(w, names)) == 0;
  const SchreierResult rs = reidemeister_schreier(pg.presentation, kernel);
  const AbelianInvariants cab = abelianization(rs.presentation);
  const std::size_t bound = 1 + kernel.index() * static_cast<std::size_t>(pg.presentation.generators() - 1);
  const bool comm_ok = kernel.index() == 6 && table_is_closed(kernel, pg.presentation) && words_inside &&
                       cab.rank == 2 && cab.torsion.empty() &&
                       static_cast<std::size_t>(rs.presentation.generators()) <= bound;
  out.push_back(make("abelianization", "commutator-ab", "the commutator subgroup has abelianization Z + Z", comm_ok,
                     "index-6 table from the action on the abelianization; Reidemeister-Schreier rewrite",
                     {{"index", std::to_string(kernel.index())},
                      {"schreier generators", std::to_string(rs.presentation.generators())},
                      {"schreier relators", std::to_string(rs.presentation.relators().size())},
                      {"invariants", cab.to_string()}}));

  const std::vector<std::string> hyb = {"E1", "U1", "U2"};
  std::vector<std::string> rels;
  for (const auto& id : relation_identities(3)) rels.push_back(id.lhs);
  const Presentation partial = Presentation::from_expressions(hyb, rels, "hybrid-3-partial");
  const AbelianInvariants pab = abelianization(partial);
  out.push_back(make("abelianization", "hybrid-finite-ab",
                     "<E1, U1, U2 | finite-order relations> has finite abelianization, so H(3) does too",
                     pab.is_finite(), "an upper bound only; the exact abelianization is not determined",
                     {{"invariants", pab.to_string()}}));

  std::vector<std::string> prels;
  const std::vector<std::string> phyb = {"E1p", "U1", "U2"};
  for (const auto& r : rels) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r.compare(i, 2, "E1") == 0) {
        s += "(E1p^2)";
        ++i;
      } else {
        s += r[i];
      }
    }
    prels.push_back(s);
  }
  const Presentation primed = Presentation::from_expressions(phyb, prels, "hybrid-3-primed-partial");
  const AbelianInvariants prab = abelianization(primed);
  const Catalog& c = catalog(3);
  const bool square = proj_eq(c.eval("E1p^2"), c.matrix("E1"));
  out.push_back(make("abelianization", "primed-finite-ab", "H'(3) = <E1p, U1, U2> has finite abelianization",
                     prab.is_finite() && square, "uses E1p^2 ~ E1 (checked: " + yes_no(square) + ")",
                     {{"invariants", prab.to_string()}}));

  const bool premises = vanish && comm_ok && prab.is_finite() && square;
  out.push_back(make("abelianization", "primed-infinite-index",
                     "H'(3) has infinite index in the commutator subgroup, hence in the Picard group", premises,
                     "a finite-index subgroup with finite abelianization would force finite abelianization of "
                     "the commutator subgroup, which is Z + Z"));
  return out;
}

InfinitenessCertificate triangle_236_certificate() {
  const Presentation g = triangle_quotient_presentation();
  const auto& names = g.generator_names();
  return build_certificate(g, {parse_word("c", names)},
                           {EuclideanMotion::parse("1+w", "0"), EuclideanMotion::parse("-1", "1"),
                            EuclideanMotion::identity()},
                           parse_word("a^3 b", names));
}

InfinitenessCertificate hybrid_quotient_certificate(Variant v) {
  const Presentation q = hybrid_quotient(3, v);
  const auto a = EuclideanMotion::parse("1+w", "0");
  const auto b = EuclideanMotion::parse("-1", "1");
  // P = a b, Q = b, R = c
  return build_certificate(q, {}, {a * b, b, EuclideanMotion::identity()},
                           parse_word("(P Q^-1)^3 Q", q.generator_names()));
}

IndexResult index_report(int d, const EnumerationLimits& limits) {
  IndexResult res;
  res.d = d;
  const Presentation q = hybrid_quotient(d);
  res.table = todd_coxeter(q, {}, limits);
  res.provenance = {"words", "normality"};
  if (res.table.complete()) {
    res.finite = true;
    res.index = res.table.index();
    return res;
  }
  if (ring_from_d(d) != Ring::Eisenstein) return res;
  res.provenance.push_back("sign-extension");
  res.tietze = verify_tietze(q, triangle_quotient_presentation(), triangle_quotient_substitution());
  res.certificate = triangle_236_certificate();
  return res;
}

std::vector<CheckResult> index_checks(int d, const EnumerationLimits& limits) {
  std::vector<CheckResult> out;
  const IndexResult ir = index_report(d, limits);
  const Presentation q = hybrid_quotient(d);
  const std::string quot = "quotient by the hybrid";
  const auto stats = [&] {
    return std::vector<Witness>{{"cosets defined", std::to_string(ir.table.stats().defined)},
                                {"max live cosets", std::to_string(ir.table.stats().max_live)},
                                {"quotient relators", std::to_string(q.relators().size())}};
  };
  const bool normal = all_pass(verify_normality(d)) && all_pass(check_identities(word_identities(d)));

  if (d == 1 || d == 7) {
    const std::size_t want = d == 1 ? 2 : 1;
    auto w = stats();
    w.insert(w.begin(), {"index", ir.finite ? std::to_string(ir.index) : "overflow"});
    out.push_back(make("index", "index", "the hybrid has index " + std::to_string(want),
                       ir.finite && ir.index == want && table_is_closed(ir.table, q) && normal,
                       "coset enumeration of the " + quot + " over the trivial subgroup", w));
    out.push_back(make("index", "full-limit-set", "the hybrid has full limit set",
                       ir.finite && ir.index == want,
                       "finite index in a lattice, so a lattice itself"));
    return out;
  }

  // d = 3
  out.push_back(make("index", "enumeration",
                     "coset enumeration of the " + quot + " does not close within " +
                         std::to_string(limits.max_cosets) + " cosets",
                     !ir.finite, "expected; an enumeration that stops proves nothing by itself", stats()));
  const TietzeCheck tz = ir.tietze.value_or(TietzeCheck{});
  out.push_back(make("index", "tietze", "a = P Q^-1, b = Q, c = R turns the quotient into G", tz.ok(),
                     "each side's relators reduce to the identity in the other's normal closure",
                     {{"inverse maps", yes_no(tz.inverse_maps)},
                      {"quotient relators in G", yes_no(tz.forward_relators)},
                      {"G relators in quotient", yes_no(tz.backward_relators)}}));

  const InfinitenessCertificate cert = ir.certificate.value_or(triangle_236_certificate());
  std::vector<Witness> rels;
  for (const auto& r : cert.relators) rels.push_back({r.relator, r.image.to_string()});
  out.push_back(make("index", "certificate-relators", "after killing c, every relator of G maps to the identity motion",
                     cert.valid() && revalidate(cert), "a -> (1+w, 0), b -> (-1, 1), c -> (1, 0)", rels));
  const bool minus_one = cert.witness_image == EuclideanMotion::parse("1", "-1");
  out.push_back(make("index", "certificate-witness", "a^3 b maps to the translation z -> z - 1",
                     minus_one && !cert.witness_image.order().has_value(), "a translation has infinite order",
                     {{"image", cert.witness_image.to_string()}}));
  const InfinitenessCertificate direct = hybrid_quotient_certificate();
  out.push_back(make("index", "certificate-direct", "the same motions represent the quotient in P, Q, R",
                     direct.valid() && revalidate(direct), "P -> (-1-w, 1+w), Q -> (-1, 1), R -> (1, 0)",
                     {{"witness (P Q^-1)^3 Q", direct.witness_image.to_string()}}));
  const bool sign = all_pass(sign_extension_checks());
  const bool infinite = tz.ok() && cert.valid() && revalidate(cert) && minus_one && direct.valid() && normal;
  out.push_back(make("index", "infinite-index", "the hybrid H(3) has infinite index in the Picard group",
                     infinite && sign,
                     "G is infinite, so the normal subgroup generated by E1, U1, E2, U2 has infinite index, and "
                     "H(3) contains it with index dividing 4"));

  const Catalog& c = catalog(3);
  auto fixes_line = [&](const Mat3& m) {
    // m preserves the complex line with polar vector e2 iff m e2 is a multiple of e2
    return m(0, 1).is_zero() && m(2, 1).is_zero();
  };
  const bool dense = fixes_line(c.matrix("U1")) && fixes_line(c.matrix("U2")) && !fixes_line(c.matrix("E1"));
  out.push_back(make("index", "zariski-dense", "E1 moves the complex line preserved by U1 and U2", dense,
                     "U1 and U2 fix 0 and infinity; their common complex line has polar vector e2"));
  out.push_back(make("index", "thin", "H(3) is a thin subgroup", infinite && sign && dense,
                     "infinite index plus Zariski density"));
  out.push_back(make("index", "full-limit-set", "H(3) has full limit set", normal,
                     "consequence: an infinite normal subgroup of a lattice has the lattice's limit set"));
  out.push_back(make("index", "geometrically-infinite", "H(3) is not geometrically finite",
                     normal && infinite && sign,
                     "consequence: full limit set with infinite index in a lattice"));
  return out;
}

std::vector<CheckResult> check_primed(int d, const EnumerationLimits& limits) {
  std::vector<CheckResult> out;
  const Catalog& c = catalog(d);
  if (c.ring() == Ring::Eisenstein) {
    out.push_back(make("primed", "E1p^2~E1", "E1p = P^2 R Q^2 P^-2 squares to E1",
                       proj_eq(c.eval("E1p^2"), c.matrix("E1"))));
    const InfinitenessCertificate cert = hybrid_quotient_certificate(Variant::Primed);
    const bool infinite = cert.valid() && revalidate(cert);
    CheckResult r = make("primed", "primed-quotient",
                         "the Picard group modulo the normal closure of H'(3) is trivial", false,
                         infinite ? "computed: the quotient maps onto the (2,3,6) triangle group, so it is infinite"
                                  : "certificate did not validate",
                         {{"witness (P Q^-1)^3 Q", cert.witness_image.to_string()}});
    if (infinite) r.status = Status::Discrepancy;
    out.push_back(std::move(r));
    return out;
  }
  if (c.ring() == Ring::Gauss) {
    const auto order = projective_order(c.matrix("R1"));
    out.push_back(make("primed", "R1-order", "R1 has order 4", order == 4L));
    out.push_back(make("primed", "R1-word", "R1 ~ (T^-1 I0 Q)^2 and R2 ~ I0 R1 I0",
                       proj_eq(c.eval("(T^-1 I0 Q)^2"), c.matrix("R1")) &&
                           proj_eq(c.eval("I0 R1 I0"), c.matrix("R2"))));
    const Presentation q = hybrid_quotient(1, Variant::Primed);
    const CosetTable t = todd_coxeter(q, {}, limits);
    const bool two = t.complete() && t.index() == 2 && table_is_closed(t, q);
    CheckResult r = make("primed", "primed-index", "the primed hybrid H'(1) is the full lattice", false,
                         two ? "computed: index 2; (T^-1 I0 Q)^2 has even length in I0, Q, so R1 already lies in H(1)"
                             : "enumeration did not give index 2",
                         {{"index", t.complete() ? std::to_string(t.index()) : "overflow"}});
    if (two) r.status = Status::Discrepancy;
    out.push_back(std::move(r));
    return out;
  }
  throw std::invalid_argument("no primed hybrid variant for d = 7");
}

std::vector<CheckResult> search_checks(int d, const SearchConfig& cfg) {
  std::vector<CheckResult> out;
  const Catalog& c = catalog(d);
  const auto& pg = c.picard();
  std::vector<Named3> gens;
  for (std::size_t i = 0; i < pg.realization.size(); ++i)
    gens.push_back({pg.presentation.generator_names()[i], pg.realization[i]});
  auto run = [&](const std::string& target, int depth, std::size_t want_len) {
    SearchConfig sc = cfg;
    sc.max_depth = std::max(depth, 0);
    const SearchResult r = find_word(c.matrix(target), gens, sc);
    std::string claim = "a word for " + target + " within depth " + std::to_string(depth);
    bool ok = r.found && r.verified;
    if (want_len) {
      claim += " of length " + std::to_string(want_len);
      ok = ok && r.length() == want_len;
    }
    out.push_back(make("search", "search:" + target, claim, ok,
                       r.found ? std::string{} : "not found; bound exhausted: " + r.exhausted,
                       {{"word", r.found ? r.rendered : "-"},
                        {"length", std::to_string(r.length())},
                        {"visited", std::to_string(r.visited)}}));
  };
  switch (c.ring()) {
    case Ring::Eisenstein:
      run("U1", 3, 2);
      run("E1", cfg.max_depth, 0);
      break;
    case Ring::Gauss:
      run("U1", 3, 1);
      run("U2", 3, 3);
      break;
    case Ring::Seven:
      run("A1", 4, 4);
      run("U1", 4, 4);
      break;
  }
  return out;
}

Report verify(int d, std::string_view scope, const VerifyOptions& opts) {
  if (!scope_applies(scope, d)) {
    throw std::invalid_argument("scope '" + std::string(scope) + "' does not apply to d = " + std::to_string(d));
  }
  Report rep;
  rep.d = d;
  rep.scope = std::string(scope);
  const std::map<std::string, std::function<std::vector<CheckResult>()>> runners = {
      {"forms", [&] { return check_forms(d); }},
      {"words", [&] { return check_identities(word_identities(d)); }},
      {"normality", [&] { return verify_normality(d); }},
      {"relations", [&] { return check_identities(relation_identities(d)); }},
      {"sign-extension", [&] { return sign_extension_checks(); }},
      {"classification", [&] { return check_classification(d); }},
      {"abelianization", [&] { return hybrid_abelianization_bounds(); }},
      {"search", [&] { return search_checks(d, opts.search); }},
      {"index", [&] { return index_checks(d, opts.limits); }},
      {"primed", [&] { return check_primed(d, opts.limits); }},
  };
  for (const auto& s : kScopes) {
    if (scope != "all" && scope != s) continue;
    if (!scope_applies(s, d)) continue;
    auto checks = runners.at(s)();
    rep.checks.insert(rep.checks.end(), std::make_move_iterator(checks.begin()),
                      std::make_move_iterator(checks.end()));
  }
  return rep;
}

}  // namespace picard
