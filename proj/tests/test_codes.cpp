#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <thread>

#include "sdt/codes.hpp"
#include "support.hpp"

using namespace sdt;

namespace {

// The length-7 Hamming pair from the standard presentation.
FqMatrix hamming7_g() {
    return FqMatrix(FieldCtx(2), 4, 7,
                    {1, 0, 0, 0, 0, 1, 1,
                     0, 1, 0, 0, 1, 0, 1,
                     0, 0, 1, 0, 1, 1, 0,
                     0, 0, 0, 1, 1, 1, 1});
}

FqMatrix hamming7_h() {
    return FqMatrix(FieldCtx(2), 3, 7,
                    {0, 0, 0, 1, 1, 1, 1,
                     0, 1, 1, 0, 0, 1, 1,
                     1, 0, 1, 0, 1, 0, 1});
}

}  // namespace

TEST_CASE("hamming generator and parity check are orthogonal, H has rank 3") {
    FqMatrix g = hamming7_g(), h = hamming7_h();
    CHECK(rank(h) == 3);
    CHECK((g * h.transpose()).is_zero());
}

TEST_CASE("from_generator derives an H with the same row space as the printed one") {
    LinearCode code = LinearCode::from_generator(hamming7_g());
    CHECK(code.dimension() == 4);
    CHECK((code.generator() * code.parity_check().transpose()).is_zero());
    CHECK(same_row_space(code.parity_check(), hamming7_h()));
}

TEST_CASE("systematic generator (I|0) gives H = (0|I)") {
    FieldCtx f5(5);
    FqMatrix g(f5, 2, 5);
    g.set(0, 0, 1);
    g.set(1, 1, 1);
    LinearCode code = LinearCode::from_generator(g);
    FqMatrix expect(f5, 3, 5);
    expect.set(0, 2, 1);
    expect.set(1, 3, 1);
    expect.set(2, 4, 1);
    CHECK(code.parity_check() == expect);
}

TEST_CASE("random rank-4 generator over F3 yields orthogonal parity check") {
    FieldCtx f3(3);
    Rng rng(7);
    FqMatrix g = random_matrix(f3, 4, 9, rng);
    while (rank(g) < 4) g = random_matrix(f3, 4, 9, rng);
    LinearCode code = LinearCode::from_generator(g);
    CHECK((code.generator() * code.parity_check().transpose()).is_zero());
    CHECK(rank(code.parity_check()) == 5);
}

TEST_CASE("dual dimensions add to n") {
    LinearCode code = hamming_code(3);
    LinearCode d = dual(code);
    CHECK(code.dimension() + d.dimension() == code.length());
    LinearCode rnd = random_code(FieldCtx(3), 9, 4, RandomCodeModel::generator, 11);
    CHECK(rnd.dimension() + dual(rnd).dimension() == rnd.length());
}

TEST_CASE("random_code is deterministic in the seed") {
    LinearCode a = random_code(FieldCtx(2), 16, 8, RandomCodeModel::parity_check, 99);
    LinearCode b = random_code(FieldCtx(2), 16, 8, RandomCodeModel::parity_check, 99);
    CHECK(a.parity_check() == b.parity_check());
}

TEST_CASE("raw-model full-rank fraction matches the exact density product") {
    // H-model, q=2, n=24, n-k=12 rows: density = prod_{i=1..12} (1 - 2^-(12+i)).
    const std::size_t n = 24, k = 12, trials = 10000;
    FieldCtx f2(2);
    Rng rng(2024);
    std::uint64_t full = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        FqMatrix h = random_matrix(f2, n - k, n, rng);
        full += rank(h) == n - k;
    }
    double density = 1.0;
    for (std::size_t i = 1; i <= n - k; ++i)
        density *= 1.0 - std::pow(2.0, -static_cast<double>(k + i));
    CHECK(sdt::test::within_3sigma(full, trials, density));
}

TEST_CASE("syndrome membership law: P_H(y H^T = s) = q^-(n-k)") {
    const std::size_t n = 16, k = 8, trials = 20000;
    for (unsigned q : {2u, 3u}) {
        FieldCtx f(q);
        Rng rng(31 + q);
        FqVector y = random_weight_vector(f, n, 5, rng);
        FqVector s = random_vector(f, n - k, rng);
        std::uint64_t hits = 0;
        for (std::size_t i = 0; i < trials; ++i) {
            FqMatrix h = random_matrix(f, n - k, n, rng);
            hits += h.mul_vec_t(y) == s;
        }
        CHECK(sdt::test::within_3sigma(hits, trials, std::pow(double(q), -double(n - k))));
    }
}

TEST_CASE("hamming_code r=3 reproduces the printed parity-check matrix") {
    LinearCode code = hamming_code(3);
    CHECK(code.parity_check() == hamming7_h());
    CHECK(code.length() == 7);
    CHECK(code.dimension() == 4);
}

TEST_CASE("hamming minimum distances") {
    CHECK(min_distance_bruteforce(hamming_code(2)) == 3);  // [3,1] repetition
    CHECK(min_distance_bruteforce(hamming_code(3)) == 3);
}

TEST_CASE("repetition code distance is n") {
    FieldCtx f2(2);
    FqMatrix g(f2, 1, 6);
    for (std::size_t j = 0; j < 6; ++j) g.set(0, j, 1);
    CHECK(min_distance_bruteforce(LinearCode::from_generator(g)) == 6);
}

TEST_CASE("GRS code: orthogonality, MDS distance, duals") {
    FieldCtx f7(7);
    std::vector<std::uint32_t> xs = {0, 1, 2, 3, 4, 5};
    std::vector<std::uint32_t> ones(6, 1);
    GrsCode grs(f7, xs, ones, 3);
    FqMatrix g = grs.generator(), h = grs.parity_check();
    CHECK((g * h.transpose()).is_zero());
    CHECK(min_distance_bruteforce(grs.code()) == 4);  // n - k + 1

    // dual of dual returns the original row space
    GrsCode dual_grs(f7, xs, grs.dual_multipliers(), 3);
    GrsCode dual_dual(f7, xs, dual_grs.dual_multipliers(), 3);
    CHECK(same_row_space(dual_dual.generator(), g));
}

TEST_CASE("GRS with k=n has an empty parity check") {
    FieldCtx f7(7);
    std::vector<std::uint32_t> xs = {1, 2, 3};
    std::vector<std::uint32_t> ones(3, 1);
    GrsCode grs(f7, xs, ones, 3);
    CHECK(grs.parity_check().rows() == 0);
    CHECK(rank(grs.generator()) == 3);  // the full space
}

TEST_CASE("GRS constructor rejects bad inputs") {
    FieldCtx f7(7);
    CHECK_THROWS_AS(GrsCode(f7, {1, 1, 2}, {1, 1, 1}, 2), DomainError);   // duplicate points
    CHECK_THROWS_AS(GrsCode(f7, {1, 2, 3}, {1, 0, 1}, 2), DomainError);   // zero multiplier
    CHECK_THROWS_AS(GrsCode(FieldCtx(5), {0, 1, 2, 3, 4, 0}, {1, 1, 1, 1, 1, 1}, 2), DomainError);
}

TEST_CASE("min_distance guard") {
    LinearCode big = random_code(FieldCtx(2), 60, 30, RandomCodeModel::parity_check, 5);
    CHECK_THROWS_AS(min_distance_bruteforce(big), TooLargeError);
}

TEST_CASE("coset representative and same_coset") {
    LinearCode code = hamming_code(3);
    FieldCtx f2(2);
    SUBCASE("zero syndrome gives a codeword") {
        FqVector rep = coset_representative(code, FqVector(f2, 3));
        CHECK(code.contains(rep));
        CHECK(same_coset(code, rep, rep));
    }
    SUBCASE("adding a codeword stays in the coset") {
        Rng rng(12);
        FqVector a = random_vector(f2, 7, rng);
        FqVector c = code.encode(random_vector(f2, 4, rng));
        CHECK(same_coset(code, a, a + c));
    }
}

TEST_CASE("same_coset agrees with brute-force membership of the difference") {
    FieldCtx f3(3);
    LinearCode code = random_code(f3, 9, 4, RandomCodeModel::generator, 21);
    std::set<std::vector<std::uint32_t>> codewords;
    for_each_codeword(code, [&](const FqVector& c) { codewords.insert(c.entries()); });
    Rng rng(22);
    for (int i = 0; i < 50; ++i) {
        FqVector a = random_vector(f3, 9, rng), b = random_vector(f3, 9, rng);
        CHECK(same_coset(code, a, b) == (codewords.count((a - b).entries()) > 0));
    }
}

TEST_CASE("puncturing at all positions returns the same code") {
    LinearCode code = hamming_code(3);
    std::vector<std::uint32_t> all = {0, 1, 2, 3, 4, 5, 6};
    LinearCode punct = puncture(code, all);
    CHECK(punct.dimension() == code.dimension());
    CHECK(same_row_space(punct.generator(), code.generator()));
}

TEST_CASE("information sets of the Hamming code") {
    LinearCode code = hamming_code(3);
    CHECK(is_information_set(code, {0, 1, 2, 3}));
    // columns 1,2,3 of H are dependent (c3 = c1 + c2), so the complement
    // {4,5,6,7} fails; 0-indexed positions {3,4,5,6}.
    CHECK(!is_information_set(code, {3, 4, 5, 6}));
}

TEST_CASE("puncture dimension matches augmented information sets") {
    FieldCtx f2(2);
    Rng rng(77);
    LinearCode code = random_code(f2, 12, 5, RandomCodeModel::parity_check, 42);
    for (int i = 0; i < 30; ++i) {
        auto positions = rng.subset(12, 7);  // k + 2
        LinearCode punct = puncture(code, positions);
        CHECK((punct.dimension() == code.dimension()) == is_information_set(code, positions));
    }
}

TEST_CASE("information-set criterion via G matches the H criterion") {
    FieldCtx f3(3);
    Rng rng(5);
    LinearCode code = random_code(f3, 10, 4, RandomCodeModel::generator, 9);
    for (int i = 0; i < 40; ++i) {
        auto positions = rng.subset(10, 4);
        std::vector<std::uint32_t> comp;
        for (std::uint32_t j = 0; j < 10; ++j)
            if (std::find(positions.begin(), positions.end(), j) == positions.end())
                comp.push_back(j);
        const bool via_g = is_information_set(code, positions);
        const bool via_h = rank(code.parity_check().columns(comp)) == 6;
        CHECK(via_g == via_h);
    }
}

TEST_CASE("concurrent first access to the derived matrix is safe") {
    LinearCode code = random_code(FieldCtx(3), 16, 7, RandomCodeModel::parity_check, 314);
    std::vector<std::thread> pool;
    std::vector<FqMatrix> results(8, FqMatrix(FieldCtx(3), 1, 1));
    for (int i = 0; i < 8; ++i)
        pool.emplace_back([&, i] { results[i] = code.generator(); });
    for (auto& th : pool) th.join();
    for (int i = 1; i < 8; ++i) CHECK(results[i] == results[0]);
    CHECK((results[0] * code.parity_check().transpose()).is_zero());
}

TEST_CASE("disjoint balls and syndrome injectivity up to (d-1)/2") {
    LinearCode code = hamming_code(3);  // d = 3, radius 1
    std::set<std::vector<std::uint32_t>> syndromes;
    FieldCtx f2(2);
    // weight 0 and 1 errors all have distinct syndromes
    syndromes.insert(code.syndrome(FqVector(f2, 7)).entries());
    for (std::size_t i = 0; i < 7; ++i) {
        FqVector e(f2, 7);
        e.set(i, 1);
        CHECK(syndromes.insert(code.syndrome(e).entries()).second);
    }
    // balls of radius 1 around distinct codewords are disjoint
    std::set<std::vector<std::uint32_t>> covered;
    for_each_codeword(code, [&](const FqVector& c) {
        CHECK(covered.insert(c.entries()).second);
        for (std::size_t i = 0; i < 7; ++i) {
            FqVector e(f2, 7);
            e.set(i, 1);
            CHECK(covered.insert((c + e).entries()).second);
        }
    });
}
