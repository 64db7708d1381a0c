// Exercises the shared library through its C header only.
#include "cyclic/cyclic.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <vector>

namespace {

cyc_complex re(double x) { return {x, 0}; }

struct RepHandle {
    cyc_representation* ptr = nullptr;
    ~RepHandle() { cyc_rep_free(ptr); }
};

struct SeqHandle {
    cyc_sequence* ptr = nullptr;
    ~SeqHandle() { cyc_sequence_free(ptr); }
};

} // namespace

TEST(CApi, RepresentationLifecycle)
{
    RepHandle rep;
    ASSERT_EQ(cyc_rep_spin(2, &rep.ptr), CYC_OK);
    EXPECT_EQ(cyc_rep_dim(rep.ptr), 3u);
    const cyc_complex kappa = cyc_rep_kappa(rep.ptr);
    EXPECT_EQ(kappa.re, 0);
    EXPECT_EQ(kappa.im, 1);

    double defect = -1;
    ASSERT_EQ(cyc_rep_validate_cyclic(rep.ptr, &defect), CYC_OK);
    EXPECT_LE(defect, 1e-14);

    std::vector<cyc_complex> jz(9);
    ASSERT_EQ(cyc_rep_generator(rep.ptr, CYC_AXIS_Z, jz.data()), CYC_OK);
    EXPECT_EQ(jz[0].re, 1);
    EXPECT_EQ(jz[4].re, 0);
    EXPECT_EQ(jz[8].re, -1);

    RepHandle rescaled;
    ASSERT_EQ(cyc_rep_rescale(rep.ptr, {0, -1}, &rescaled.ptr), CYC_OK);
    EXPECT_EQ(cyc_rep_kappa(rescaled.ptr).re, 1);
}

TEST(CApi, ErrorCodesAndMessages)
{
    cyc_representation* rep = reinterpret_cast<cyc_representation*>(0x1);
    EXPECT_EQ(cyc_rep_spin(0, &rep), CYC_ERR_DEGENERATE);
    EXPECT_EQ(rep, nullptr);
    EXPECT_GT(std::strlen(cyc_last_error()), 0u);
    EXPECT_STREQ(cyc_status_string(CYC_ERR_DEGENERATE), "degenerate");

    EXPECT_EQ(cyc_rep_so3(nullptr), CYC_ERR_NULL_ARGUMENT);

    int variant = -1;
    EXPECT_EQ(cyc_variant_parse("bogus", &variant), CYC_ERR_VARIANT);
    EXPECT_EQ(cyc_split_three(re(1), re(1), re(1), re(1), 12, nullptr, nullptr, nullptr, nullptr), CYC_ERR_VARIANT);
    EXPECT_EQ(cyc_split_two(re(0), re(1), re(1), CYC_AXIS_Z, CYC_AXIS_X, nullptr, nullptr, nullptr),
              CYC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Variants)
{
    ASSERT_EQ(cyc_variant_count(), 12);
    EXPECT_STREQ(cyc_variant_name(0), "t2r1");
    EXPECT_STREQ(cyc_variant_name(11), "t3r8");
    EXPECT_EQ(cyc_variant_name(12), nullptr);
    int idx = -1;
    ASSERT_EQ(cyc_variant_parse("t3r5", &idx), CYC_OK);
    EXPECT_EQ(idx, 8);
}

TEST(CApi, SplitTwoAndResidual)
{
    RepHandle so3;
    ASSERT_EQ(cyc_rep_so3(&so3.ptr), CYC_OK);
    SeqHandle seq;
    cyc_complex p{}, q{};
    ASSERT_EQ(cyc_split_two(re(1), re(1), re(1), CYC_AXIS_Z, CYC_AXIS_X, &p, &q, &seq.ptr), CYC_OK);
    EXPECT_NEAR(p.re, M_PI / 4, 1e-16);
    EXPECT_NEAR(q.re, std::sqrt(2.0), 1e-16);
    ASSERT_EQ(cyc_sequence_length(seq.ptr), 3u);

    cyc_axis axis{};
    cyc_complex coeff{};
    ASSERT_EQ(cyc_sequence_factor(seq.ptr, 1, &axis, &coeff), CYC_OK);
    EXPECT_EQ(axis, CYC_AXIS_X);
    EXPECT_EQ(cyc_sequence_factor(seq.ptr, 3, &axis, &coeff), CYC_ERR_INDEX);

    double r = -1;
    ASSERT_EQ(cyc_residual(so3.ptr, re(1), re(1), re(0), seq.ptr, &r), CYC_OK);
    EXPECT_LE(r, 1e-11);

    RepHandle spin;
    ASSERT_EQ(cyc_rep_spin(1, &spin.ptr), CYC_OK);
    EXPECT_EQ(cyc_residual(spin.ptr, re(1), re(1), re(0), seq.ptr, &r), CYC_ERR_ALGEBRA_MISMATCH);
}

TEST(CApi, SplitThreeEvaluate)
{
    RepHandle spin;
    ASSERT_EQ(cyc_rep_spin(3, &spin.ptr), CYC_OK);
    const cyc_complex kappa = cyc_rep_kappa(spin.ptr);
    for (int v = 0; v < cyc_variant_count(); ++v) {
        SeqHandle seq;
        cyc_complex p{}, q{}, r{};
        ASSERT_EQ(cyc_split_three(kappa, re(1.5), re(-2), re(0.7), v, &p, &q, &r, &seq.ptr), CYC_OK);
        EXPECT_NEAR(r.re, std::sqrt(1.5 * 1.5 + 4 + 0.49), 1e-15);
        double res = -1;
        ASSERT_EQ(cyc_residual(spin.ptr, re(1.5), re(-2), re(0.7), seq.ptr, &res), CYC_OK);
        EXPECT_LE(res, 1e-10);

        int differs = -1;
        double printed = -1;
        ASSERT_EQ(cyc_printed_form_residual(spin.ptr, re(1.5), re(-2), re(0.7), v, &differs, &printed), CYC_OK);
        EXPECT_EQ(differs, (v == 4 || v == 5) ? 1 : 0);
    }

    SeqHandle empty;
    ASSERT_EQ(cyc_sequence_create(kappa, nullptr, nullptr, 0, &empty.ptr), CYC_OK);
    std::vector<cyc_complex> m(16);
    ASSERT_EQ(cyc_evaluate(spin.ptr, empty.ptr, m.data()), CYC_OK);
    EXPECT_EQ(m[0].re, 1);
    EXPECT_EQ(m[1].re, 0);
}

TEST(CApi, SequenceCreateValidatesSymmetry)
{
    const cyc_axis axes[3] = {CYC_AXIS_Z, CYC_AXIS_X, CYC_AXIS_Z};
    const cyc_complex bad[3] = {re(0.3), re(1), re(0.3)};
    cyc_sequence* seq = nullptr;
    EXPECT_EQ(cyc_sequence_create(re(1), axes, bad, 3, &seq), CYC_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(seq, nullptr);
}

TEST(CApi, AdjointRotate)
{
    const cyc_complex v[3] = {re(1), re(0), re(0)};
    cyc_complex w[3];
    ASSERT_EQ(cyc_adjoint_rotate(re(1), CYC_AXIS_Z, re(M_PI / 2), v, w), CYC_OK);
    EXPECT_NEAR(w[0].re, 0, 1e-16);
    EXPECT_NEAR(w[1].re, -1, 1e-16);
}

TEST(CApi, BchCurve)
{
    // spin-1/2: X = 0.1 i Jx, Y = 0.1 i Jy
    const cyc_complex x[4] = {{0, 0}, {0, 0.05}, {0, 0.05}, {0, 0}};
    const cyc_complex y[4] = {{0, 0}, {0.05, 0}, {-0.05, 0}, {0, 0}};
    const int degrees[3] = {3, 1, 2};
    double errors[3] = {-1, -1, -1};
    ASSERT_EQ(cyc_bch_truncation_curve(2, x, y, degrees, 3, errors), CYC_OK);
    EXPECT_LT(errors[0], errors[2]);
    EXPECT_LT(errors[2], errors[1]);

    const int too_high[1] = {11};
    EXPECT_EQ(cyc_bch_truncation_curve(2, x, y, too_high, 1, errors), CYC_ERR_BUDGET);

    const cyc_complex big[4] = {{0, 0}, {5, 0}, {5, 0}, {0, 0}};
    EXPECT_EQ(cyc_bch_truncation_curve(2, big, y, degrees, 3, errors), CYC_ERR_DIVERGENCE);

    cyc_complex h[4];
    ASSERT_EQ(cyc_bch_dynkin_sum(2, x, y, 1, h), CYC_OK);
    EXPECT_NEAR(h[1].re, 0.05, 1e-16);
    EXPECT_NEAR(h[1].im, 0.05, 1e-16);
}

TEST(CApi, RabiSweep)
{
    const cyc_rabi_params params{2, 2, 0.1, 1};
    const double t[3] = {0, 5, 10};
    double prob[3], defect[3];
    ASSERT_EQ(cyc_rabi_sweep(&params, t, 3, -1, 1, prob, defect), CYC_OK);
    EXPECT_EQ(prob[0], 0);
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(prob[i], std::pow(std::sin(0.1 * 2 * t[i] / 2), 2), 1e-12);
        EXPECT_LE(defect[i], 1e-12);
    }
    EXPECT_EQ(cyc_rabi_sweep(&params, t, 3, 0, 1, prob, defect), CYC_ERR_INDEX);

    cyc_complex u[4];
    ASSERT_EQ(cyc_rabi_propagator(&params, 0, u), CYC_OK);
    EXPECT_EQ(u[0].re, 1);
    EXPECT_EQ(u[3].re, 1);
}
