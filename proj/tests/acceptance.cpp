// Acceptance battery: one test case per criterion, one printed line each.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "vsym/acceptance.hpp"

using vsym::accept::CriterionResult;

namespace {

void report(const CriterionResult& r) {
    std::printf("[criterion %2d] %s - %s (%s, %.2fs)\n", r.id,
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
}

}  // namespace

TEST_CASE("criterion 1: Vaserstein Pfaffian identity") {
    auto r = vsym::accept::criterion_pfaffian_identity();
    report(r);
    CHECK(r.seconds < 10.0);
}

TEST_CASE("criterion 2: f well-definedness") {
    auto r = vsym::accept::criterion_f_well_defined();
    report(r);
    CHECK(r.seconds < 5.0);
}

TEST_CASE("criterion 3: f coordinate formula vs matrix form") {
    report(vsym::accept::criterion_f_matrix_agreement());
}

TEST_CASE("criterion 4: Proposition formula") {
    report(vsym::accept::criterion_proposition_formula());
}

TEST_CASE("criterion 5: H-certificate identity") {
    report(vsym::accept::criterion_H_certificate());
}

TEST_CASE("criterion 6: Hopf norm identity") {
    report(vsym::accept::criterion_norm_identity());
}

TEST_CASE("criterion 7: numeric Hopf invariant") {
    auto r = vsym::accept::criterion_numeric_hopf();
    report(r);
    CHECK(r.seconds < 60.0);
}

TEST_CASE("criterion 8: certification engine") {
    report(vsym::accept::criterion_certification_engine());
}

TEST_CASE("criterion 9: elementary-action preservation") {
    report(vsym::accept::criterion_elementary_action());
}

TEST_CASE("criterion 10: basepoint Witt witness") {
    report(vsym::accept::criterion_basepoint_witness());
}
