#include <random>

#include "doctest.h"
#include "json.hpp"
#include "picard/certify.hpp"
#include "picard/euclidean.hpp"
#include "picard/report.hpp"

using namespace picard;

TEST_SUITE("certify") {

TEST_CASE("Euclidean motions") {
  const EuclideanMotion rot = EuclideanMotion::parse("1+w", "0");
  CHECK(rot.order() == 6);
  const EuclideanMotion flip = EuclideanMotion::parse("-1", "1");
  CHECK(flip.order() == 2);
  const EuclideanMotion tr = EuclideanMotion::parse("1", "2-w");
  CHECK(tr.is_translation());
  CHECK(tr.order() == std::nullopt);
  CHECK((rot * rot.inverse()).is_identity());
  CHECK(rot.pow(6).is_identity());
  CHECK(rot.pow(-1) == rot.inverse());
  const QuadInt z(Ring::Eisenstein, 3, -2);
  CHECK((rot * flip).apply(z) == rot.apply(flip.apply(z)));
  CHECK((rot * flip).affine_matrix() == rot.affine_matrix() * flip.affine_matrix());
  CHECK_THROWS_AS(EuclideanMotion(QuadInt(Ring::Eisenstein, 2), QuadInt(Ring::Eisenstein)), std::invalid_argument);
  CHECK_THROWS(EuclideanMotion(QuadInt(Ring::Gauss, 1), QuadInt(Ring::Gauss)));
}

TEST_CASE("triangle group certificate") {
  const InfinitenessCertificate cert = triangle_236_certificate();
  CHECK(cert.valid());
  CHECK(revalidate(cert));
  CHECK(cert.witness_image == EuclideanMotion::parse("1", "-1"));
  CHECK(cert.relators.size() == cert.presentation.relators().size() + cert.killed.size());
  for (const auto& r : cert.relators) {
    CHECK(r.identity);
    CHECK(r.matrix_identity);
  }
  // Moving one image breaks a relator, and both checks notice.
  InfinitenessCertificate broken = cert;
  broken.images[1] = EuclideanMotion::parse("-1", "0");
  CHECK_FALSE(revalidate(broken));
  const InfinitenessCertificate rebuilt =
      build_certificate(cert.presentation, cert.killed, broken.images, cert.witness);
  CHECK_FALSE(rebuilt.valid());
}

TEST_CASE("hybrid quotient certificate") {
  const InfinitenessCertificate c = hybrid_quotient_certificate();
  CHECK(c.valid());
  CHECK(revalidate(c));
  CHECK(hybrid_quotient_certificate(Variant::Primed).valid());
}

TEST_CASE("index reports") {
  const IndexResult r1 = index_report(1);
  CHECK(r1.finite);
  CHECK(r1.index == 2);
  CHECK(r1.table.complete());
  const IndexResult r7 = index_report(7);
  CHECK(r7.finite);
  CHECK(r7.index == 1);
  EnumerationLimits lim;
  lim.max_cosets = 20'000;
  const IndexResult r3 = index_report(3, lim);
  CHECK_FALSE(r3.finite);
  REQUIRE(r3.certificate);
  CHECK(r3.certificate->valid());
  REQUIRE(r3.tietze);
  CHECK(r3.tietze->ok());
}

TEST_CASE("verification reports") {
  EnumerationLimits lim;
  lim.max_cosets = 20'000;
  VerifyOptions opts{lim, {}};
  for (int d : {1, 3, 7}) {
    const Report r = verify(d, "all", opts);
    CAPTURE(d);
    CHECK(r.count(Status::Fail) == 0);
    CHECK(r.passed(false));
    const auto j = nlohmann::json::parse(render_json(r));
    CHECK(j["schema"] == "picard-report/1");
    CHECK(j["d"] == d);
    CHECK(j["checks"].size() == r.checks.size());
    CHECK(render_markdown(r).find("pass") != std::string::npos);
    CHECK(render_json(r) == render_json(verify(d, "all", opts)));
  }
  // Discrepancies with published claims fail under strict.
  const Report p3 = verify(3, "primed", opts);
  CHECK(p3.count(Status::Discrepancy) == 1);
  CHECK_FALSE(p3.passed(true));
  REQUIRE(p3.first_failure(true) != nullptr);
  CHECK(p3.first_failure(true)->id == "primed-quotient");
  CHECK(verify(7, "all", opts).passed(true));
  CHECK_THROWS_AS((void)verify(7, "primed", opts), std::invalid_argument);
  CHECK_THROWS_AS((void)verify(1, "relations", opts), std::invalid_argument);
  CHECK_THROWS_AS((void)verify(3, "bogus", opts), std::invalid_argument);
  CHECK(scope_applies("abelianization", 3));
  CHECK_FALSE(scope_applies("abelianization", 1));
}

}
