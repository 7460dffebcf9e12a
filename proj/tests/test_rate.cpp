#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "ofdma/error.hpp"
#include "ofdma/rate.hpp"

using namespace ofdma;

TEST_CASE("snr gap reference values") {
  CHECK(snr_gap(1e-3) == doctest::Approx(3.3114483540925224).epsilon(1e-12));
  CHECK(snr_gap(1e-6) == doctest::Approx(7.628795403456358).epsilon(1e-12));
  CHECK_THROWS_AS(snr_gap(0.2), Error);
  CHECK_THROWS_AS(snr_gap(0.0), Error);
  CHECK_THROWS_AS(snr_gap(-0.1), Error);
  // Just inside the range the gap is tiny but positive.
  CHECK(snr_gap(0.1999) > 0.0);
}

TEST_CASE("subcarrier rate closed-form points") {
  SUBCASE("zero gain carries zero rate") {
    CHECK(subcarrier_rate(0.0, testutil::unit_model()) == 0.0);
  }
  SUBCASE("effective SNR of 3 doubles the spectral efficiency") {
    // h^2 * P / (N_t * bw * gap) = 3  ->  rate = bw * log2(4) = 2 * bw.
    RateModel model{1e4, 2.0, 1e-4, 1.5};
    const double h = std::sqrt(3.0 * model.noise_density_w_per_hz *
                               model.subcarrier_bw_hz * model.snr_gap /
                               model.per_subcarrier_power_w);
    CHECK(subcarrier_rate(h, model) == doctest::Approx(2e4).epsilon(1e-12));
  }
  SUBCASE("table 1 bandwidth at unity effective SNR") {
    const double bw = 1.25e6 / 72;
    RateModel model{bw, 1.0, 1.0 / bw, 1.0};  // h = 1 -> SNR/gap = 1
    CHECK(subcarrier_rate(1.0, model) == doctest::Approx(17361.11111).epsilon(1e-8));
  }
  SUBCASE("negative or non-finite gain is rejected") {
    CHECK_THROWS_AS(subcarrier_rate(-0.1, testutil::unit_model()), Error);
    CHECK_THROWS_AS(subcarrier_rate(std::nan(""), testutil::unit_model()), Error);
  }
}

TEST_CASE("rate matches an independent scalar recomputation") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> pos(0.1, 10.0);
  for (int i = 0; i < 2000; ++i) {
    RateModel model{pos(rng), pos(rng), pos(rng), pos(rng)};
    const double h = pos(rng);
    const double expected =
        model.subcarrier_bw_hz *
        std::log2(1.0 + h * h * model.per_subcarrier_power_w /
                            (model.noise_density_w_per_hz * model.subcarrier_bw_hz *
                             model.snr_gap));
    CHECK(subcarrier_rate(h, model) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("monotonicity in gain, power, noise and gap") {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> pos(0.1, 10.0);
  for (int i = 0; i < 2000; ++i) {
    RateModel model{pos(rng), pos(rng), pos(rng), pos(rng)};
    const double lo = pos(rng);
    const double hi = lo * (1.0 + pos(rng));
    CHECK(subcarrier_rate(lo, model) < subcarrier_rate(hi, model));

    RateModel more_power = model;
    more_power.per_subcarrier_power_w = model.per_subcarrier_power_w * (1.0 + pos(rng));
    CHECK(subcarrier_rate(lo, model) < subcarrier_rate(lo, more_power));

    RateModel more_noise = model;
    more_noise.noise_density_w_per_hz =
        model.noise_density_w_per_hz * (1.0 + pos(rng));
    CHECK(subcarrier_rate(lo, more_noise) < subcarrier_rate(lo, model));

    RateModel more_gap = model;
    more_gap.snr_gap = model.snr_gap * (1.0 + pos(rng));
    CHECK(subcarrier_rate(lo, more_gap) < subcarrier_rate(lo, model));
  }
}

TEST_CASE("user frame rate sums owned subcarriers only") {
  const RateModel model = testutil::unit_model();
  GainMatrix gains(2, 3);
  gains << 1.0, 2.0, 0.5,
           0.7, 0.3, 1.5;
  Allocation alloc(3);
  alloc.owner << 0, 1, 0;

  SUBCASE("empty ownership gives zero") {
    Allocation none(3);
    none.owner << 1, 1, 1;
    CHECK(user_frame_rate(gains.row(0), none, model, 0) == 0.0);
  }
  SUBCASE("owning everything with equal gains gives N times the scalar rate") {
    GainMatrix equal = GainMatrix::Constant(1, 3, 2.0);
    Allocation all(3);
    all.owner << 0, 0, 0;
    CHECK(user_frame_rate(equal.row(0), all, model, 0) ==
          doctest::Approx(3.0 * subcarrier_rate(2.0, model)).epsilon(1e-15));
  }
  SUBCASE("matches a scalar loop on a small instance") {
    double expected0 = subcarrier_rate(1.0, model) + subcarrier_rate(0.5, model);
    double expected1 = subcarrier_rate(0.3, model);
    CHECK(user_frame_rate(gains.row(0), alloc, model, 0) == expected0);
    CHECK(user_frame_rate(gains.row(1), alloc, model, 1) == expected1);
    const RateVector all = frame_rates(gains, alloc, model);
    CHECK(all[0] == expected0);
    CHECK(all[1] == expected1);
  }
}

TEST_CASE("frame rates partition the per-subcarrier total") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 200; ++i) {
    const GainMatrix gains = testutil::random_gains(4, 6, rng);
    const RateModel model = testutil::unit_model();
    Allocation alloc(6);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int n = 0; n < 6; ++n) alloc.owner[n] = pick(rng);
    double total = 0.0;
    for (int n = 0; n < 6; ++n) {
      total += subcarrier_rate(gains(alloc.owner[n], n), model);
    }
    CHECK(frame_rates(gains, alloc, model).sum() == doctest::Approx(total).epsilon(1e-12));
  }
}

TEST_CASE("diversity error bound") {
  CHECK(diversity_error_bound(1, 10.0) == doctest::Approx(0.025).epsilon(1e-12));
  CHECK(diversity_error_bound(2, 10.0) == doctest::Approx(0.001875).epsilon(1e-12));
  CHECK(diversity_error_bound(1, 0.25) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(diversity_error_bound(0, 10.0), Error);
  CHECK_THROWS_AS(diversity_error_bound(1, 0.0), Error);

  SUBCASE("strictly decreasing in M for SNR >= 1") {
    for (double snr : {1.0, 2.0, 10.0, 100.0}) {
      for (int m = 1; m <= 10; ++m) {
        CHECK(diversity_error_bound(m + 1, snr) < diversity_error_bound(m, snr));
      }
    }
  }
  SUBCASE("large branch counts stay finite") {
    CHECK(std::isfinite(diversity_error_bound(60, 10.0)));
  }
}
