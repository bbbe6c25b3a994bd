#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tsgeom/generator.hpp"
#include "tsgeom/rng.hpp"
#include "tsgeom/symbolize.hpp"

using namespace tsgeom;

namespace {

Signal make_signal(std::vector<double> samples, double fs = 1.0) {
    return Signal(std::move(samples), fs);
}

// random signal that hits sparse configurations too: mixes continuous noise
// with small-integer lattice values (exact ties, exact arithmetic progressions)
std::vector<double> mixed_samples(Rng& rng, std::size_t n) {
    std::vector<double> s(n);
    for (auto& v : s) {
        if (rng.uniform01() < 0.5) v = static_cast<double>(rng.next_u64() % 5);
        else v = rng.uniform(-2.0, 2.0);
    }
    return s;
}

} // namespace

TEST_SUITE("symbolize") {

TEST_CASE("difference triple follows the backward/forward convention") {
    const auto t1 = difference_triple(make_signal({0, 1, 0}), 1);
    CHECK(t1.d_left == 1.0);
    CHECK(t1.d2 == -2.0);
    CHECK(t1.d_right == -1.0);

    const auto t2 = difference_triple(make_signal({5, 5, 5}), 1);
    CHECK(t2.d_left == 0.0);
    CHECK(t2.d2 == 0.0);
    CHECK(t2.d_right == 0.0);

    const auto t3 = difference_triple(make_signal({0, 2, 3}), 1);
    CHECK(t3.d_left == 2.0);
    CHECK(t3.d2 == -1.0);
    CHECK(t3.d_right == 1.0);
}

TEST_CASE("difference triple rejects boundary indices") {
    const Signal s = make_signal({0, 1, 2, 3});
    CHECK_THROWS_AS(difference_triple(s, 0), InvalidInput);
    CHECK_THROWS_AS(difference_triple(s, 3), InvalidInput);
    CHECK_THROWS_AS(difference_triple(make_signal({0, 1}), 1), EmptyInput);
}

TEST_CASE("d2 equals d_right - d_left for arbitrary signals") {
    Rng rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> s = mixed_samples(rng, 16);
        const Signal sig = make_signal(std::move(s));
        for (std::size_t n = 1; n + 1 < sig.size(); ++n) {
            const auto t = difference_triple(sig, n);
            CHECK(t.d2 == t.d_right - t.d_left);
        }
    }
}

TEST_CASE("left and right products") {
    const DifferenceTriple peak{1, -2, -1, 1};
    CHECK(left_product(peak) == -2.0);
    CHECK(right_product(peak) == 2.0);

    const DifferenceTriple flat{0, 0, 0, 1};
    CHECK(left_product(flat) == 0.0);
    CHECK(right_product(flat) == 0.0);

    const DifferenceTriple t{2, -1, 1, 1};
    CHECK(left_product(t) == -2.0);
    CHECK(right_product(t) == -1.0);
}

TEST_CASE("pattern lookup matches the configuration table") {
    const auto c2 = pattern_lookup(Sign::Pos, Sign::Neg, Sign::Pos);
    REQUIRE(c2.has_value());
    CHECK(c2->id == 2);

    const auto c9 = pattern_lookup(Sign::Zero, Sign::Zero, Sign::Zero);
    REQUIRE(c9.has_value());
    CHECK(c9->id == 9);

    CHECK_FALSE(pattern_lookup(Sign::Pos, Sign::Pos, Sign::Neg).has_value());
}

TEST_CASE("exactly 13 of 27 patterns are valid, matching realizability") {
    const Sign all[] = {Sign::Neg, Sign::Zero, Sign::Pos};
    int valid = 0;
    for (Sign a : all) {
        for (Sign b : all) {
            for (Sign c : all) {
                const auto hit = pattern_lookup(a, b, c);
                const bool realizable =
                    oracles::realizable(sign_value(a), sign_value(b), sign_value(c));
                CHECK(hit.has_value() == realizable);
                if (hit) {
                    ++valid;
                    CHECK(hit->first_sign == a);
                    CHECK(hit->curvature_sign == b);
                    CHECK(hit->last_sign == c);
                }
            }
        }
    }
    CHECK(valid == 13);
}

TEST_CASE("enumerate_valid_patterns lists the table rows in order") {
    const auto patterns = enumerate_valid_patterns();
    REQUIRE(patterns.size() == 13);
    CHECK(patterns[7] == std::array<Sign, 3>{Sign::Neg, Sign::Zero, Sign::Neg}); // row 8
    for (const auto& p : patterns) CHECK(p != std::array<Sign, 3>{Sign::Zero, Sign::Pos, Sign::Neg});
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        const auto& row = configuration_table()[k];
        CHECK(patterns[k][0] == row.first_sign);
        CHECK(patterns[k][1] == row.curvature_sign);
        CHECK(patterns[k][2] == row.last_sign);
    }
}

TEST_CASE("classify peaks, troughs and rises") {
    CHECK(classify(make_signal({0, 1, 0}), 1).id == 6);
    CHECK(classify(make_signal({1, 0, 1}), 1).id == 5);
    CHECK(classify(make_signal({0, 1, 3}), 1).id == 3);
}

TEST_CASE("classify agrees with the brute-force oracle") {
    Rng rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        const Signal sig = make_signal(mixed_samples(rng, 12));
        for (std::size_t n = 1; n + 1 < sig.size(); ++n)
            CHECK(classify(sig, n).id ==
                  oracles::classify3(sig.samples[n - 1], sig.samples[n], sig.samples[n + 1]));
    }
}

TEST_CASE("tau > 0 can produce an unclassifiable triple, surfaced as an error") {
    // d_left = 0.4 -> Zero, d_right = -0.4 -> Zero, d2 = -0.8 -> Neg: (0,-,0) is not a row
    const Signal sig = make_signal({0.0, 0.4, 0.0});
    CHECK_THROWS_AS(classify(sig, 1, 0.5), ClassificationError);
    try {
        classify(sig, 1, 0.5);
    } catch (const ClassificationError& e) {
        CHECK(e.index == 1);
        CHECK(e.d_left == doctest::Approx(0.4));
        CHECK(e.d_right == doctest::Approx(-0.4));
        CHECK(e.d2 == doctest::Approx(-0.8));
    }
    // a generous band makes everything Zero again: configuration 9
    CHECK(classify(sig, 1, 2.0).id == 9);
    CHECK_THROWS_AS(symbolize(sig, 0.5), ClassificationError);
}

TEST_CASE("symbolize known strings") {
    CHECK(symbolize(make_signal({0, 1, 0, 1, 0})).symbols == std::vector<std::uint8_t>{6, 5, 6});
    CHECK(symbolize(make_signal({3, 3, 3, 3})).symbols == std::vector<std::uint8_t>{9, 9});
    CHECK(symbolize(make_signal({0, 1, 2, 3})).symbols == std::vector<std::uint8_t>{7, 7});
    CHECK_THROWS_AS(symbolize(make_signal({0, 1})), EmptyInput);
}

TEST_CASE("symbolize matches per-index classify and keeps adjacency") {
    Rng rng(23);
    for (int trial = 0; trial < 400; ++trial) {
        const Signal sig = make_signal(mixed_samples(rng, 40));
        const SymbolString str = symbolize(sig);
        REQUIRE(str.size() == sig.size() - 2);
        CHECK(str.source_length == sig.size());
        for (std::size_t k = 0; k < str.size(); ++k)
            CHECK(str.symbols[k] == classify(sig, k + 1).id);
        for (std::size_t k = 0; k + 1 < str.size(); ++k)
            CHECK(configuration(str.symbols[k]).last_sign ==
                  configuration(str.symbols[k + 1]).first_sign);
    }
}

TEST_CASE("tie-free signals use only the abundant configurations") {
    GeneratorSpec spec;
    spec.kind = SignalKind::WhiteNoise;
    spec.duration_s = 40.0;
    spec.sample_rate = 250.0;
    spec.seed = 99;
    const SymbolString str = symbolize(generate(spec));
    CHECK(std::all_of(str.symbols.begin(), str.symbols.end(),
                      [](std::uint8_t id) { return id >= 1 && id <= 6; }));
}

TEST_CASE("sign hierarchy: left product sign never exceeds right product sign") {
    Rng rng(31);
    int zero_zero = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        const auto s = mixed_samples(rng, 3);
        const Signal sig = make_signal(s);
        const auto t = difference_triple(sig, 1);
        const Sign left = sign_of(left_product(t));
        const Sign right = sign_of(right_product(t));
        CHECK(sign_le(left, right));
        if (left == Sign::Zero && right == Sign::Zero) {
            ++zero_zero;
            const int id = classify(sig, 1).id;
            CHECK(id >= 7);
            CHECK(id <= 9);
        }
    }
    CHECK(zero_zero > 0);
}

TEST_CASE("peaks and troughs appear exactly when the products straddle zero") {
    Rng rng(37);
    for (int trial = 0; trial < 20000; ++trial) {
        const auto s = mixed_samples(rng, 3);
        const Signal sig = make_signal(s);
        const auto t = difference_triple(sig, 1);
        const int id = classify(sig, 1).id;
        const bool extremum = id == 5 || id == 6;
        const bool straddles = left_product(t) < 0.0 && right_product(t) > 0.0;
        CHECK(extremum == straddles);
    }
}

TEST_CASE("both products vanish only for rows 7, 8, 9") {
    std::set<int> seen;
    const std::vector<std::vector<double>> cases = {
        {0, 1, 2},    // 7: equal positive slopes
        {2, 1, 0},    // 8: equal negative slopes
        {1, 1, 1},    // 9: flat
    };
    for (const auto& s : cases) {
        const Signal sig = make_signal(std::vector<double>(s));
        const auto t = difference_triple(sig, 1);
        CHECK(left_product(t) == 0.0);
        CHECK(right_product(t) == 0.0);
        seen.insert(classify(sig, 1).id);
    }
    CHECK(seen == std::set<int>{7, 8, 9});
}

TEST_CASE("amplitude sign flip swaps paired configurations") {
    // s -> -s maps: 1<->2, 3<->4, 5<->6, 7<->8, 9 fixed, 10<->11, 12<->13
    constexpr std::array<int, 14> swap_map = {0, 2, 1, 4, 3, 6, 5, 8, 7, 9, 11, 10, 13, 12};
    Rng rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> s = mixed_samples(rng, 20);
        std::vector<double> neg(s.size());
        std::transform(s.begin(), s.end(), neg.begin(), [](double v) { return -v; });
        const auto a = symbolize(make_signal(std::move(s))).symbols;
        const auto b = symbolize(make_signal(std::move(neg))).symbols;
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k)
            CHECK(static_cast<int>(b[k]) == swap_map[a[k]]);
    }
}

TEST_CASE("peaks_troughs reports source coordinates") {
    const auto pt1 = peaks_troughs(symbolize(make_signal({0, 1, 0, 1, 0})));
    CHECK(pt1.peaks == std::vector<std::size_t>{1, 3});
    CHECK(pt1.troughs == std::vector<std::size_t>{2});

    const auto pt2 = peaks_troughs(symbolize(make_signal({3, 3, 3, 3})));
    CHECK(pt2.peaks.empty());
    CHECK(pt2.troughs.empty());
}

TEST_CASE("sine peaks and troughs match direct extremum detection") {
    GeneratorSpec spec;
    spec.kind = SignalKind::Sine;
    spec.amplitude = 1.0;
    spec.frequency_hz = 1.0;
    spec.sample_rate = 32.0; // 32 samples per period
    spec.duration_s = 2.0;   // 2 periods
    spec.phase = 0.1;        // avoid samples exactly on the extremum
    const Signal sine = generate(spec);
    const auto found = peaks_troughs(symbolize(sine));
    const auto expected = oracles::local_extrema(sine.samples);
    CHECK(found.peaks == expected.maxima);
    CHECK(found.troughs == expected.minima);
    CHECK(found.peaks.size() == 2);
    CHECK(found.troughs.size() == 2);
}

} // TEST_SUITE
