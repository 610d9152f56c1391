#include <doctest.h>

#include <random>

#include "oracle/cue_oracle.hpp"
#include "turncue/audio.hpp"
#include "turncue/error.hpp"

using namespace turncue;

namespace {

const AngularRange kRange(0.0, 90.0);
const Vec3 kU{0, 0, 0};
const Vec3 kT{2, 0, 0};

}  // namespace

TEST_CASE("sound source position examples") {
    CHECK(sound_source_position(kU, kT, 90, kRange) == kU);
    CHECK(sound_source_position(kU, kT, 0, kRange) == kT);
    const Vec3 mid = sound_source_position(kU, kT, 45, kRange);
    CHECK(mid.x == doctest::Approx(1.0));
    CHECK(mid.y == 0.0);
    CHECK(sound_source_position(kU, kT, 150, kRange) == kU);
    CHECK(sound_source_position(kU, kT, -5, kRange) == kT);
}

TEST_CASE("sound source requires distinct endpoints") {
    CHECK_THROWS_AS(sound_source_position(kT, kT, 45, kRange), DegenerateGeometryError);
}

TEST_CASE("sound source lies on the segment") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> c(-4.0, 4.0);
    std::uniform_real_distribution<double> th(-10.0, 100.0);
    for (int i = 0; i < 5000; ++i) {
        const Vec3 u{c(rng), c(rng), c(rng)};
        const Vec3 t{c(rng), c(rng), c(rng)};
        const double theta = th(rng);
        for (SoundEasing e : {SoundEasing::Linear, SoundEasing::Cosine}) {
            const Vec3 p = sound_source_position(u, t, theta, kRange, e);
            const double residual = length(p - u) + length(t - p) - length(t - u);
            CHECK(std::abs(residual) < 1e-9);
        }
    }
}

TEST_CASE("cosine easing keeps the endpoints") {
    CHECK(sound_path_fraction(90, kRange, SoundEasing::Cosine) == 0.0);
    CHECK(sound_path_fraction(0, kRange, SoundEasing::Cosine) == 1.0);
    CHECK(sound_path_fraction(45, kRange, SoundEasing::Cosine) < 0.5);
}

TEST_CASE("linear fraction matches the oracle") {
    for (double th = 0; th <= 90; th += 1) {
        const auto o = oracle::sound({0, 0, 0}, {1, 0, 0}, th, 0, 90);
        CHECK(oracle::close_rel(sound_path_fraction(th, kRange), o[0], 1e-12));
    }
}

TEST_CASE("duck gain") {
    const DuckEnvelope env{0.0, 2.0, 0.5};
    CHECK(duck_gain(1.0, env, Role::Listener) == 0.5);
    CHECK(duck_gain(2.5, env, Role::Listener) == 1.0);
    CHECK(duck_gain(1.0, env, Role::Speaker) == 1.0);
    CHECK(duck_gain(0.0, env, Role::Listener) == 0.5);
    CHECK(duck_gain(2.0, env, Role::Listener) == 1.0);
    CHECK(duck_gain(-0.1, env, Role::Listener) == 1.0);
}

TEST_CASE("duck integral over the window") {
    const DuckEnvelope env{5.0, 2.0, 0.5};
    const double dt = 1e-3;
    double lost = 0.0;
    for (int i = 0; i < 10000; ++i) {
        lost += (1.0 - duck_gain(i * dt, env, Role::Listener)) * dt;
    }
    CHECK(lost == doctest::Approx(env.duration * (1.0 - env.ducked_gain)).epsilon(1e-3));
}

TEST_CASE("chime schedule") {
    const DuckEnvelope tmpl;
    SUBCASE("single at 5") {
        const ChimePlan p = chime_schedule(5.0, ChimePolicy{}, tmpl);
        CHECK(p.chimes == std::vector<double>{5.0});
        CHECK(p.duck.start_time == 5.0);
        CHECK(p.duck.start_time + p.duck.duration == 7.0);
    }
    SUBCASE("single at 0") {
        const ChimePlan p = chime_schedule(0.0, ChimePolicy{}, tmpl);
        CHECK(p.chimes == std::vector<double>{0.0});
        CHECK(p.duck.start_time == 0.0);
    }
    SUBCASE("repeats") {
        const ChimePlan p = chime_schedule(5.0, ChimePolicy{3.0, 2, 2.0}, tmpl);
        CHECK(p.chimes == std::vector<double>{5.0, 8.0});
    }
    SUBCASE("invalid policies") {
        CHECK_THROWS_AS(chime_schedule(5.0, ChimePolicy{0.0, 0, 2.0}, tmpl), ConfigError);
        CHECK_THROWS_AS(chime_schedule(5.0, ChimePolicy{0.0, 3, 2.0}, tmpl), ConfigError);
        CHECK_THROWS_AS(chime_schedule(-1.0, ChimePolicy{}, tmpl), ConfigError);
    }
}

TEST_CASE("chime playing window") {
    const std::vector<double> chimes{5.0, 8.0};
    CHECK_FALSE(chime_playing(4.9, chimes, 2.0));
    CHECK(chime_playing(5.0, chimes, 2.0));
    CHECK_FALSE(chime_playing(7.5, chimes, 2.0));
    CHECK(chime_playing(9.9, chimes, 2.0));
    CHECK_FALSE(chime_playing(10.0, chimes, 2.0));
}
