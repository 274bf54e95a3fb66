#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "patlab/dataset.hpp"

using namespace patlab;

namespace {

const std::filesystem::path kFixtures = PATLAB_FIXTURES;

TransactionDataset example_dataset() { return read_dataset(kFixtures / "example_dataset.txt"); }

Itemset items_of(const TransactionDataset& ds, const std::string& tokens) {
    Itemset s;
    for (char c : tokens) s = s.with(ds.universe().id_of(std::string(1, c)));
    return s;
}

}  // namespace

TEST_CASE("universe validation") {
    CHECK_THROWS_AS(ItemUniverse({"a", "a"}), Error);
    CHECK_THROWS_AS(ItemUniverse({""}), Error);
    CHECK_THROWS_AS(ItemUniverse({"a b"}), Error);
    std::vector<std::string> too_many;
    for (int i = 0; i < 65; ++i) too_many.push_back("i" + std::to_string(i));
    CHECK_THROWS_AS(ItemUniverse{too_many}, Error);

    const ItemUniverse u({"A", "B"});
    CHECK(u.id_of("B") == 1);
    CHECK(!u.find("C").has_value());
    CHECK_THROWS_AS(u.id_of("C"), UniverseMismatchError);
    CHECK(u.format(Itemset::of({0, 1})) == "{A, B}");
    CHECK(u.format(Itemset{}) == "{}");
}

TEST_CASE("subset walk visits canonical lexicographic order") {
    std::vector<Itemset> visited;
    for_each_subset_lex(Itemset(0b1111), [&](Itemset p) {
        visited.push_back(p);
        return Walk::descend;
    });
    CHECK(visited == oracle::all_patterns_canonical(4));
}

TEST_CASE("superset walk orders by added count then lexicographic") {
    std::vector<Itemset> visited;
    for_each_strict_superset(Itemset::single(1), Itemset(0b1111), [&](Itemset q) {
        visited.push_back(q);
        return false;
    });
    const std::vector<Itemset> expected = {
        Itemset::of({0, 1}), Itemset::of({1, 2}), Itemset::of({1, 3}),
        Itemset::of({0, 1, 2}), Itemset::of({0, 1, 3}), Itemset::of({1, 2, 3}),
        Itemset::of({0, 1, 2, 3}),
    };
    CHECK(visited == expected);
}

TEST_CASE("cover and frequency on the five-item example") {
    const auto ds = example_dataset();
    const Itemset ce = items_of(ds, "CE");

    CHECK(cover(ds, ce) == std::vector<std::size_t>{2, 3, 4});
    CHECK(frequency(ds, ce) == 3);
    CHECK(is_frequent(ds, ce, 2));
    CHECK_FALSE(is_frequent(ds, items_of(ds, "D"), 2));

    // A appears in every transaction except t4
    CHECK(cover(ds, items_of(ds, "B")) == std::vector<std::size_t>{0, 2, 3, 4});
    // no transaction holds the full universe
    CHECK(frequency(ds, ds.universe().all()) == 0);

    CHECK_THROWS_AS(frequency(ds, Itemset{}), Error);
    CHECK_THROWS_AS(frequency(ds, Itemset::single(63)), UniverseMismatchError);
}

TEST_CASE("cover equals the naive double loop on random datasets") {
    gen::Rng rng{101};
    for (int iter = 0; iter < 100; ++iter) {
        const auto ds = gen::random_dataset(rng, 6, 8);
        const Itemset p = gen::random_nonempty_subset(rng, 6);
        CHECK(cover(ds, p) == oracle::naive_cover(ds, p));
        CHECK(frequency(ds, p) == oracle::naive_freq(ds, p));
    }
}

TEST_CASE("duplicated transactions count separately") {
    const ItemUniverse u({"a", "b"});
    const Itemset ab = Itemset::of({0, 1});
    const TransactionDataset ds(u, {ab, ab, Itemset::single(0)});
    CHECK(frequency(ds, ab) == 2);
    CHECK(frequency(ds, Itemset::single(0)) == 3);
}

TEST_CASE("bag semantics: doubling the dataset doubles thresholds") {
    gen::Rng rng{55};
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = rng.between(1, 6), m = rng.between(0, 6);
        std::vector<Itemset> tx;
        for (std::size_t j = 0; j < m; ++j) tx.push_back(gen::random_subset(rng, n));
        std::vector<Itemset> doubled = tx;
        doubled.insert(doubled.end(), tx.begin(), tx.end());
        const TransactionDataset d(gen::letters(n), tx);
        const TransactionDataset dd(gen::letters(n), doubled);
        const Itemset p = gen::random_nonempty_subset(rng, n);
        const std::uint64_t s = rng.between(0, m + 1);
        CHECK(frequency(dd, p) == 2 * frequency(d, p));
        CHECK(is_frequent(d, p, s) == is_frequent(dd, p, 2 * s));
    }
}

TEST_CASE("anti-monotonicity of frequency") {
    gen::Rng rng{77};
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = rng.between(2, 8);
        const auto ds = gen::random_dataset(rng, n, rng.between(0, 10));
        const Itemset q = gen::random_nonempty_subset(rng, n);
        Itemset p = q & gen::random_subset(rng, n);
        if (p.empty()) p = Itemset::single(q.ids().front());
        REQUIRE(p.subset_of(q));
        CHECK(frequency(ds, q) <= frequency(ds, p));
        CHECK(frequency(ds, p) <= ds.transaction_count());
        // covers nest as bags: every index covering q covers p
        const auto cq = cover(ds, q);
        const auto cp = cover(ds, p);
        CHECK(std::includes(cp.begin(), cp.end(), cq.begin(), cq.end()));
    }
}

TEST_CASE("enumerate_frequent golden cases") {
    const auto ds = example_dataset();
    CHECK(enumerate_frequent(ds, 5).empty());

    const auto at3 = enumerate_frequent(ds, 3);
    const Itemset bce = items_of(ds, "BCE");
    CHECK(std::find(at3.begin(), at3.end(), bce) != at3.end());

    const TransactionDataset one(ItemUniverse({"A", "B"}), {Itemset::of({0, 1})});
    const auto all = enumerate_frequent(one, 1);
    CHECK(all == std::vector<Itemset>{Itemset::single(0), Itemset::of({0, 1}),
                                      Itemset::single(1)});

    CHECK_THROWS_AS(enumerate_frequent(ds, 0), Error);
}

TEST_CASE("enumerate_frequent equals brute force") {
    gen::Rng rng{31};
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = rng.between(1, 9);
        const auto ds = gen::random_dataset(rng, n, rng.between(1, 10));
        const std::uint64_t s = rng.between(1, 4);
        CHECK(enumerate_frequent(ds, s) == oracle::naive_frequent(ds, s));
    }
    // one larger instance at the documented bound
    gen::Rng big{32};
    const auto ds = gen::random_dataset(big, 12, 14);
    CHECK(enumerate_frequent(ds, 2) == oracle::naive_frequent(ds, 2));
}

TEST_CASE("dataset file round-trip") {
    const auto ds = example_dataset();
    const std::string text = serialize_dataset(ds);
    CHECK(parse_dataset_text(text, "<mem>") == ds);

    const auto tmp = std::filesystem::temp_directory_path() / "patlab_core_roundtrip.txt";
    write_dataset(ds, tmp);
    CHECK(read_dataset(tmp) == ds);
    std::filesystem::remove(tmp);
}

TEST_CASE("empty transactions use the '-' marker") {
    const TransactionDataset ds(ItemUniverse({"a"}), {Itemset{}, Itemset::single(0)});
    const std::string text = serialize_dataset(ds);
    CHECK(text == "items: a\n-\na\n");
    CHECK(parse_dataset_text(text, "<mem>") == ds);
}

TEST_CASE("dataset parse errors carry line numbers") {
    const char* dup =
        "items: A B\n"
        "A A\n";
    CHECK_THROWS_WITH_AS(parse_dataset_text(dup, "f"), "f:2: duplicate item 'A' in transaction",
                         ParseError);

    CHECK_THROWS_AS(parse_dataset_text("items: A\n\nA\n", "f"), ParseError);   // blank line
    CHECK_THROWS_AS(parse_dataset_text("items: A\nB\n", "f"), ParseError);     // unknown item
    CHECK_THROWS_AS(parse_dataset_text("A B\nA\n", "f"), ParseError);          // missing header
    CHECK_THROWS_AS(parse_dataset_text("# only comments\n", "f"), ParseError); // no header
}

TEST_CASE("the sixteen-row reference fixture parses") {
    const auto ds = read_dataset(kFixtures / "confrule_ref_dataset.txt");
    CHECK(ds.transaction_count() == 16);
    CHECK(ds.universe().size() == 7);
    // last row is the clause transaction {neg1, pos2, neg3}
    CHECK(ds.transaction(15) ==
          Itemset::of({ds.universe().id_of("neg1"), ds.universe().id_of("pos2"),
                       ds.universe().id_of("neg3")}));
}
