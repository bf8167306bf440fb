#include "picard_cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "picard/catalog.hpp"
#include "picard/certify.hpp"
#include "picard/cxhyp.hpp"
#include "picard/fpgroups.hpp"
#include "picard/search.hpp"

namespace picard::cli {

namespace {

VerifyOptions options_from(const RunConfig& cfg) {
  VerifyOptions o;
  o.limits.max_cosets = cfg.max_cosets;
  o.search.max_depth = cfg.max_depth;
  o.search.max_height_bits = cfg.max_height;
  o.search.direction =
      cfg.direction == "unidirectional" ? SearchDirection::Unidirectional : SearchDirection::Bidirectional;
  return o;
}

std::string fmt15(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

BoundaryPoint parse_base(Ring r, const std::string& base) {
  if (base == "origin") return BoundaryPoint::origin(r);
  if (base == "infinity") return BoundaryPoint::infinity(r);
  const auto comma = base.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("base must be origin, infinity or 'z,s'");
  return BoundaryPoint::finite(QuadRat::parse(r, base.substr(0, comma)), QuadRat::parse(r, base.substr(comma + 1)));
}

std::vector<Named3> generator_set(const Catalog& c, const std::string& which) {
  std::vector<Named3> out;
  if (which == "picard") {
    const auto& pg = c.picard();
    for (std::size_t i = 0; i < pg.realization.size(); ++i)
      out.push_back({pg.presentation.generator_names()[i], pg.realization[i]});
    return out;
  }
  if (which == "hybrid") return c.hybrid().gens;
  std::stringstream ss(which);
  std::string name;
  while (std::getline(ss, name, ',')) out.push_back({name, c.matrix(name)});
  return out;
}

Presentation named_presentation(const std::string& name) {
  if (name == "picard-1") return picard_group(1).presentation;
  if (name == "picard-3") return picard_group(3).presentation;
  if (name == "picard-7") return picard_group(7).presentation;
  if (name == "G") return triangle_quotient_presentation();
  for (int d : {1, 3, 7}) {
    if (name == "quotient-" + std::to_string(d)) return hybrid_quotient(d);
  }
  std::ifstream in(name);
  if (!in) throw std::invalid_argument("unknown presentation or unreadable file: " + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str(), name);
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format != "json" && format != "md") throw std::invalid_argument("verify supports --format json or md");
  std::vector<Report> reports;
  if (cfg.all) {
    for (int d : {1, 3, 7}) reports.push_back(verify(d, "all", options_from(cfg)));
  } else {
    reports.push_back(verify(cfg.d, cfg.scope, options_from(cfg)));
  }
  if (format == "md") {
    for (const auto& rep : reports) out << render_markdown(rep);
  } else if (reports.size() == 1) {
    out << render_json(reports.front());
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports) arr.push_back(nlohmann::ordered_json::parse(render_json(rep)));
    out << arr.dump(2) << "\n";
  }
  int status = 0;
  for (const auto& rep : reports) {
    if (const CheckResult* f = rep.first_failure(cfg.strict)) {
      err << to_string(f->status) << ": d=" << rep.d << " " << f->scope << " / " << f->id << "\n";
      status = 1;
      continue;
    }
    for (const auto& c : rep.checks)
      if (c.status == Status::Discrepancy)
        err << "discrepancy: d=" << rep.d << " " << c.scope << " / " << c.id << "\n";
  }
  return status;
}

int cmd_orbit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.length < 0) throw std::invalid_argument("orbit length must be nonnegative");
  const Catalog& c = catalog(cfg.d);
  const Ring r = c.ring();
  const BoundaryPoint base = parse_base(r, cfg.base);

  std::vector<Mat3> letters;
  for (const auto& g : c.hybrid(parse_variant(cfg.variant)).gens) {
    letters.push_back(g.m);
    const Mat3 inv = g.m.inverse();
    if (!proj_eq(inv, g.m)) letters.push_back(inv);
  }
  // Projectively deduplicated word ball, grown level by level.
  std::set<std::string> seen{canonical_key(Mat3::identity(r))};
  std::vector<Mat3> ball{Mat3::identity(r)};
  std::vector<Mat3> frontier = ball;
  for (int k = 0; k < cfg.length; ++k) {
    std::vector<Mat3> next;
    for (const auto& m : frontier) {
      for (const auto& l : letters) {
        Mat3 p = canonical_rep(m * l);
        if (seen.insert(canonical_key(p)).second) next.push_back(std::move(p));
      }
    }
    ball.insert(ball.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::map<std::string, BoundaryPoint> points;
  std::size_t at_infinity = 0;
  for (const auto& m : ball) {
    BoundaryPoint p = boundary_action(m, base);
    if (p.is_infinity()) {
      ++at_infinity;
      continue;
    }
    points.emplace(p.key(), std::move(p));
  }
  using Row = std::tuple<double, double, double, std::string>;
  std::vector<Row> rows;
  for (const auto& [k, p] : points) {
    const auto z = p.z().approx();
    rows.emplace_back(z.real(), z.imag(), p.t_approx(), k);
  }
  std::sort(rows.begin(), rows.end());
  out << "re_z,im_z,t\n";
  for (const auto& [x, y, t, k] : rows) out << fmt15(x) << ',' << fmt15(y) << ',' << fmt15(t) << '\n';
  err << "elements " << ball.size() << ", points " << rows.size() << ", at infinity " << at_infinity << "\n";
  return 0;
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Catalog& c = catalog(cfg.d);
  if (cfg.target.empty()) throw std::invalid_argument("search needs --target");
  const Mat3 target = c.eval(cfg.target);
  const auto gens = generator_set(c, cfg.gens);
  const SearchResult res = find_word(target, gens, options_from(cfg).search);
  nlohmann::ordered_json j;
  if (res.found) {
    j["word"] = res.rendered;
    j["length"] = res.length();
    j["verified"] = res.verified;
  } else {
    j["word"] = nullptr;
    j["found"] = false;
    j["exhausted"] = res.exhausted;
    j["pruned"] = res.pruned;
  }
  j["visited"] = res.visited;
  out << j.dump() << "\n";
  if (!res.found) {
    err << "no word within depth " << cfg.max_depth << " (" << res.exhausted << ")\n";
    return 1;
  }
  return 0;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Catalog& c = catalog(cfg.d);
  if (cfg.element.empty()) throw std::invalid_argument("classify needs --element");
  const Mat3 m = c.eval(cfg.element);
  const IsometryClass k = classify(m);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["element"] = cfg.element;
    j["class"] = std::string(to_string(k));
    j["discriminant"] = goldman_discriminant(m.trace(), m.det()).get_str();
    const auto order = projective_order(m);
    j["projective_order"] = order ? nlohmann::ordered_json(*order) : nlohmann::ordered_json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << to_string(k) << "\n";
  }
  return 0;
}

int cmd_abelianize(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Presentation p = named_presentation(cfg.presentation);
  out << abelianization(p).to_string() << "\n";
  return 0;
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  out << catalog_dump(cfg.d);
  return 0;
}

}  // namespace picard::cli
