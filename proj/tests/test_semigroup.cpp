#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "semicurve/semigroup.hpp"
#include "test_util.hpp"

using namespace semicurve;

namespace {

NumericalSemigroup example_24() {
    return NumericalSemigroup::from_small_elements({0, 8, 12, 14, 15, 16}, 20);
}

// Count gap sets H in [1, 2g-1] of size g whose complement is closed under
// addition; independent of the genus-tree walk.
long long count_by_gap_sets(int g) {
    if (g == 0) return 1;
    const int top = 2 * g - 1;
    long long count = 0;
    for (unsigned mask = 0; mask < (1u << top); ++mask) {
        if (__builtin_popcount(mask) != g) continue;
        auto is_gap = [&](int x) { return x >= 1 && x <= top && (mask >> (x - 1)) & 1u; };
        bool closed = true;
        for (int x = 1; x <= top && closed; ++x) {
            if (is_gap(x)) continue;
            for (int y = x; x + y <= top; ++y) {
                if (is_gap(y)) continue;
                if (is_gap(x + y)) { closed = false; break; }
            }
        }
        if (closed) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("from_generators: <4,9,11>") {
    auto S = NumericalSemigroup::from_generators({4, 9, 11});
    CHECK(S.conductor() == 15);
    CHECK(S.gaps() == std::vector<long long>{1, 2, 3, 5, 6, 7, 10, 14});
    CHECK(S.genus() == 8);
    CHECK(S.min_generators() == std::vector<long long>{4, 9, 11});
    CHECK(S.multiplicity() == 4);

    // Cross-check the gap list against the definitional sieve.
    auto in = testutil::sieve_membership({4, 9, 11}, 22);
    for (long long x = 0; x <= 22; ++x) CHECK(S.contains(x) == static_cast<bool>(in[x]));
}

TEST_CASE("from_generators: whole monoid and argument errors") {
    auto N = NumericalSemigroup::from_generators({1});
    CHECK(N.is_naturals());
    CHECK(N.conductor() == 0);
    CHECK(N.gaps().empty());
    CHECK(N.contains(0));
    CHECK(N.contains(12345));

    CHECK_THROWS_WITH(NumericalSemigroup::from_generators({}), "no generators");
    CHECK_THROWS_WITH(NumericalSemigroup::from_generators({4, 6}), "not co-finite");
}

TEST_CASE("from_small_elements: shapes and validation") {
    auto S = example_24();
    CHECK(S.conductor() == 20);
    CHECK(S.small_elements() == std::vector<long long>{0, 8, 12, 14, 15, 16});
    CHECK(S.multiplicity() == 8);

    auto O = NumericalSemigroup::from_small_elements({0}, 5);
    CHECK(O.is_ordinary());
    CHECK(O.genus() == 4);

    auto A = NumericalSemigroup::from_small_elements({0, 4, 8, 9, 11, 12, 13}, 15);
    CHECK(A == NumericalSemigroup::from_generators({4, 9, 11}));

    // 3 + 3 = 6 < 8 is missing from the list.
    CHECK_THROWS_WITH(NumericalSemigroup::from_small_elements({0, 3}, 8), "not a semigroup");
    CHECK_THROWS_WITH(NumericalSemigroup::from_small_elements({0, 5, 9}, 10),
                      "conductor not minimal");
}

TEST_CASE("profile: non-acute shape near the conductor") {
    auto p = profile(example_24());
    CHECK(p.e == 8);
    CHECK(p.c == 20);
    CHECK(p.d == 16);
    CHECK(p.c_sub == 14);
    CHECK(*p.d_prime == 12);
    CHECK(p.ell == 3);
    CHECK_FALSE(p.is_acute);
    CHECK_FALSE(p.is_ordinary);
    // s~ = max{s in S : s <= d, s - l not in S}: 16 - 3 = 13 is a gap, so
    // the maximum is the dominant itself.
    CHECK(*p.s_tilde == 16);
    // Defining property, checked directly.
    auto S = example_24();
    long long expect = -1;
    for (long long s = 0; s <= p.d; ++s)
        if (S.contains(s) && !S.contains(s - p.ell)) expect = s;
    CHECK(*p.s_tilde == expect);
}

TEST_CASE("profile: acute example and ordinary shape") {
    auto p = profile(NumericalSemigroup::from_generators({4, 9, 11}));
    CHECK(p.e == 4);
    CHECK(p.d == 13);
    CHECK(p.c_sub == 11);
    CHECK(*p.d_prime == 9);
    CHECK(p.ell == 1);
    CHECK(*p.s_tilde == 11);
    CHECK(p.is_acute);

    auto q = profile(NumericalSemigroup::from_small_elements({0}, 3));
    CHECK(q.e == 3);
    CHECK(q.c == 3);
    CHECK(q.is_ordinary);
    CHECK(q.g == 2);
    CHECK(q.d == 0);
    CHECK(q.c_sub == 0);
    CHECK_FALSE(q.d_prime.has_value());
}

TEST_CASE("apery_set: residue table and genus identity") {
    auto S = NumericalSemigroup::from_generators({4, 9, 11});
    CHECK(apery_set(S, 4) == std::vector<long long>{0, 9, 18, 11});

    auto O = NumericalSemigroup::from_small_elements({0}, 6);
    CHECK(apery_set(O, 6) == std::vector<long long>{0, 7, 8, 9, 10, 11});

    CHECK_THROWS_WITH(apery_set(S, 5), "not a member");

    // Genus from the Apery sums versus the gap count, over all small genus.
    enumerate_by_genus(8, [](const NumericalSemigroup& T) {
        if (T.is_naturals()) return;
        long long n = T.multiplicity();
        long long sum = 0;
        for (long long a : apery_set(T, n)) sum += a;
        CHECK((sum - n * (n - 1) / 2) / n == T.genus());
    });
}

TEST_CASE("classify_sequence: arithmetic, generalized, almost") {
    auto arith = classify_sequence(NumericalSemigroup::from_generators({5, 8, 11, 14}));
    CHECK(arith.kind == SequenceKind::Arithmetic);
    CHECK(arith.d == 3);

    auto quintic = classify_sequence(NumericalSemigroup::from_generators({4, 7, 10, 13}));
    CHECK(quintic.kind == SequenceKind::Arithmetic);
    CHECK(quintic.d == 3);

    // m_i = 2*5 + 3i: a genuinely generalized sequence.
    auto gen = classify_sequence(NumericalSemigroup::from_generators({5, 13, 16, 19}));
    CHECK(gen.kind == SequenceKind::GeneralizedArithmetic);
    CHECK(gen.a == 2);
    CHECK(gen.d == 3);
    // Exhaustive witness search agrees.
    {
        std::vector<long long> m = {5, 13, 16, 19};
        std::vector<std::pair<long long, long long>> found;
        for (long long a = 1; a <= 4; ++a)
            for (long long d = 1; d <= 20; ++d) {
                bool ok = true;
                for (size_t i = 1; i < m.size(); ++i)
                    if (m[i] != a * m[0] + static_cast<long long>(i) * d) ok = false;
                if (ok) found.push_back({a, d});
            }
        REQUIRE(found.size() == 1);
        CHECK(found[0] == std::pair<long long, long long>{2, 3});
    }

    // 5, 11, 17, 23 is plainly arithmetic with step 6 (a = 1).
    auto plain = classify_sequence(NumericalSemigroup::from_generators({5, 11, 17, 23}));
    CHECK(plain.kind == SequenceKind::Arithmetic);
    CHECK(plain.d == 6);

    // {0, 6 ->} minus {10} is generated by 6,7,8,9,11: almost arithmetic.
    auto ex38 = NumericalSemigroup::from_small_elements({0, 6, 7, 8, 9}, 11);
    CHECK(ex38.min_generators() == std::vector<long long>{6, 7, 8, 9, 11});
    CHECK(classify_sequence(ex38).kind == SequenceKind::AlmostArithmetic);
}

TEST_CASE("enumerate_by_genus: counts and uniqueness") {
    std::vector<long long> counts(9, 0);
    std::set<std::string> seen;
    enumerate_by_genus(8, [&](const NumericalSemigroup& S) {
        CHECK(static_cast<long long>(S.gaps().size()) == S.genus());
        counts[static_cast<size_t>(S.genus())]++;
        CHECK(seen.insert(S.to_string()).second);
    });
    CHECK(counts == std::vector<long long>{1, 1, 2, 4, 7, 12, 23, 39, 67});

    // Independent gap-set enumeration for the low range.
    for (int g = 0; g <= 7; ++g) CHECK(count_by_gap_sets(g) == counts[static_cast<size_t>(g)]);

    std::vector<NumericalSemigroup> only_n = all_semigroups_by_genus(0);
    REQUIRE(only_n.size() == 1);
    CHECK(only_n[0].is_naturals());
}

TEST_CASE("semigroup invariants across the small-genus catalogue") {
    enumerate_by_genus(9, [](const NumericalSemigroup& S) {
        auto p = profile(S);
        CHECK(p.e - 1 >= p.tau);
        if (!p.is_ordinary) {
            CHECK(p.d < p.c);
            CHECK(p.ell >= 1);
            CHECK(*p.s_tilde <= p.d);
            if (p.is_acute) {
                CHECK(p.c_sub <= *p.s_tilde);
                CHECK(*p.s_tilde <= p.d);
            }
        }
        // Rebuilding from the extracted minimal generators is the identity.
        CHECK(NumericalSemigroup::from_generators(S.min_generators()) == S);
        if (!S.is_naturals()) {
            CHECK(NumericalSemigroup::from_small_elements(S.small_elements(), S.conductor()) == S);
        }
    });
}

TEST_CASE("element indexing and membership") {
    auto S = NumericalSemigroup::from_generators({4, 9, 11});
    CHECK(S.element_at(0) == 0);
    CHECK(S.element_at(1) == 4);
    CHECK(S.element_at(7) == 15);
    CHECK(S.element_at(10) == 18);
    CHECK(S.index_of(15) == 7);
    CHECK_THROWS_WITH(S.index_of(10), "not a member");
    CHECK_FALSE(S.contains(-3));
}

TEST_CASE("spec grammar parsing and canonical text") {
    auto S = parse_semigroup_spec("gen:4,9,11");
    CHECK(S == NumericalSemigroup::from_generators({4, 9, 11}));
    auto T = parse_semigroup_spec("elem:0,8,12,14,15,16;c=20");
    CHECK(T == example_24());
    CHECK_THROWS(parse_semigroup_spec("nope:1,2"));
    CHECK(T.to_string() ==
          "S = <0, 8, 12, 14, 15, 16, 20 ->; gaps = {1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 13, "
          "17, 18, 19}");
}
