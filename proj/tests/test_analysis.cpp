#include <doctest.h>

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "spirale/analysis.hpp"
#include "spirale/error.hpp"
#include "support.hpp"

using namespace spirale;
using namespace spirale::test;

namespace {

SymbolString fixture(int i) {
  std::ifstream in(std::string(SPIRALE_FIXTURE_DIR) + "/challenges/ciphertext" +
                   std::to_string(i) + ".txt");
  std::stringstream ss;
  ss << in.rdbuf();
  return normalize_text(Alphabet::latin26(), ss.str());
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected spirale::Error");
  return ErrorCode::UsageError;
}

// Direct enumeration of all key sets for tiny alphabets, independent of the
// library's index arithmetic.
std::vector<KeySet> enumerate_matches(const Alphabet& a, const SymbolString& pt,
                                      const SymbolString& ct) {
  std::vector<KeySet> out;
  const std::uint32_t n = static_cast<std::uint32_t>(a.size());
  for (std::uint32_t w = 0; w < n; ++w)
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z) {
          KeySet ks({Symbol(w)}, {Symbol(x)}, {Symbol(y)}, {Symbol(z)});
          if (encrypt(ks, a, pt) == ct) out.push_back(ks);
        }
  return out;
}

}  // namespace

TEST_CASE("frequency histogram") {
  const auto& a = Alphabet::latin26();
  auto h = frequency_histogram(a, enc("AAB"));
  REQUIRE(h.size() == 26);
  CHECK(h[0] == 2);
  CHECK(h[1] == 1);
  CHECK(std::accumulate(h.begin(), h.end(), std::size_t{0}) == 3);
  auto empty = frequency_histogram(a, SymbolString{});
  CHECK(std::accumulate(empty.begin(), empty.end(), std::size_t{0}) == 0);
  auto ct1 = frequency_histogram(a, fixture(1));
  CHECK(std::accumulate(ct1.begin(), ct1.end(), std::size_t{0}) == 311);
}

TEST_CASE("index of coincidence") {
  CHECK(index_of_coincidence(enc("AAAA")) == doctest::Approx(1.0));
  CHECK(index_of_coincidence(enc(kLatin)) == doctest::Approx(0.0));
  CHECK(index_of_coincidence(enc("AB")) == doctest::Approx(0.0));
  CHECK(code_of([] { index_of_coincidence(enc("A")); }) == ErrorCode::TooShort);

  // Regression baselines for the challenge ciphertexts.
  const double baselines[] = {0.039622, 0.038582, 0.038911, 0.038457};
  const std::size_t lengths[] = {311, 634, 950, 482};
  for (int i = 1; i <= 4; ++i) {
    auto text = fixture(i);
    CHECK(text.size() == lengths[i - 1]);
    CHECK(index_of_coincidence(text) == doctest::Approx(baselines[i - 1]).epsilon(1e-4));
  }

  std::mt19937_64 rng(3);
  CHECK(index_of_coincidence(english_like(rng, 20000)) == doctest::Approx(0.0655).epsilon(0.05));
}

TEST_CASE("chi-square against uniform") {
  Histogram flat(26, 10);
  CHECK(chi_square_uniform(flat) == doctest::Approx(0.0));
  Histogram spike(26, 0);
  spike[4] = 26;
  // expected 1 per bin: 25 bins contribute 1, the spike (26 - 1)^2 = 625.
  CHECK(chi_square_uniform(spike) == doctest::Approx(650.0));
  CHECK(code_of([] { chi_square_uniform(Histogram(26, 0)); }) == ErrorCode::TooShort);
  CHECK(chi_square_quantile(25, 0.999) == doctest::Approx(52.62).epsilon(1e-3));
  CHECK(chi_square_quantile(1, 0.95) == doctest::Approx(3.841).epsilon(1e-3));
}

TEST_CASE("autocorrelation") {
  CHECK(autocorrelation_coincidence(enc("ABABAB"), 2) == doctest::Approx(1.0));
  CHECK(autocorrelation_coincidence(enc("ABABAB"), 1) == doctest::Approx(0.0));
  CHECK(autocorrelation_coincidence(enc("AABB"), 1) == doctest::Approx(2.0 / 3.0));
  CHECK(code_of([] { autocorrelation_coincidence(enc("ABAB"), 0); }) == ErrorCode::BadLag);
  CHECK(code_of([] { autocorrelation_coincidence(enc("ABAB"), 4); }) == ErrorCode::BadLag);

  std::vector<std::size_t> lags = {1, 2};
  auto report = analyze(Alphabet::latin26(), enc("ABABAB"), lags);
  CHECK(report.length == 6);
  CHECK(report.autocorr.at(2) == doctest::Approx(1.0));
  CHECK(report.ic == doctest::Approx(index_of_coincidence(enc("ABABAB"))));
}

TEST_CASE("repeated n-grams") {
  auto grams = repeated_ngrams(enc("THEXXTHEYYYTHE"), 3);
  bool found = false;
  for (const auto& g : grams) {
    if (dec(g.gram) == "THE") {
      found = true;
      CHECK(g.positions == std::vector<std::size_t>{0, 5, 11});
      CHECK(g.gaps == std::vector<std::size_t>{5, 6});
    }
    CHECK(g.positions.size() >= 2);
  }
  CHECK(found);
  CHECK(repeated_ngrams(enc("ABCDEFG"), 3).empty());
}

TEST_CASE("error propagation on the worked keystream") {
  const auto& a = Alphabet::latin26();
  Spirale s(a, KeySet::parse(a, kWorkedKeys));
  auto gen = s.generator();
  auto diff = error_propagation_profile(gen, 1, 120);
  for (std::size_t p : {1u, 50u, 74u, 99u}) CHECK(diff.count(p) == 1);
  for (std::size_t p = 2; p <= 49; ++p) CHECK(diff.count(p) == 0);
  for (std::size_t p = 51; p <= 73; ++p) CHECK(diff.count(p) == 0);
  CHECK(first_double_dependency(s.lags(), 1, 200) == 123);

  CHECK(error_propagation_profile(gen, 49, 49) == std::set<std::size_t>{49});
  CHECK(code_of([&] { error_propagation_profile(gen, 0, 100); }) == ErrorCode::BadPosition);
  CHECK(code_of([&] { error_propagation_profile(gen, 50, 100); }) == ErrorCode::BadPosition);
  CHECK(code_of([&] { error_propagation_profile(gen, 1, 48); }) == ErrorCode::BadPosition);
}

TEST_CASE("textbook lag-2 recurrence spreads an error to every later term") {
  std::vector<std::uint32_t> seed = {16, 19};
  auto diff = numeric_error_profile(seed, 1, 2, 26, 1, 4);
  CHECK(diff == std::set<std::size_t>{1, 3, 4});
  CHECK(dependency_closure(Lags{2, 1}, 1, 10) ==
        std::set<std::size_t>{1, 3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("brute-force diffs match the dependency closure") {
  std::mt19937_64 rng(50);
  const auto& a = Alphabet::latin26();
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t k = 3 + rng() % 40;
    auto lags = default_lags(k);
    std::size_t flip = 1 + rng() % k;
    std::size_t horizon = 6 * k;
    auto t = random_table(rng, a);
    KeystreamGenerator gen(t, random_symbols(rng, 26, k), lags);
    auto closure = dependency_closure(lags, flip, horizon);
    auto diff = error_propagation_profile(gen, flip, horizon);
    auto dd = first_double_dependency(lags, flip, horizon);
    auto clean_until = dd == 0 ? horizon : dd - 1;

    auto below = [&](const std::set<std::size_t>& s) {
      std::set<std::size_t> out;
      for (auto p : s)
        if (p <= clean_until) out.insert(p);
      return out;
    };
    REQUIRE(below(diff) == below(closure));
    for (auto p : diff) REQUIRE(closure.count(p) == 1);
  }
}

TEST_CASE("exhaustive search on tiny alphabets") {
  std::mt19937_64 rng(12);
  auto four = alphabet_of_size(4);
  auto truth = random_keyset(rng, 4, 1);
  auto pt = random_symbols(rng, 4, 12);
  auto ct = encrypt(truth, four, pt);
  auto found = exhaustive_search_small(four, pt, ct, 1);
  CHECK(std::find(found.begin(), found.end(), truth) != found.end());
  CHECK(found == enumerate_matches(four, pt, ct));

  auto two = alphabet_of_size(2);
  auto pt2 = random_symbols(rng, 2, 5);
  auto ct2 = encrypt(random_keyset(rng, 2, 1), two, pt2);
  CHECK(exhaustive_search_small(two, pt2, ct2, 1) == enumerate_matches(two, pt2, ct2));

  const auto& latin = Alphabet::latin26();
  CHECK(code_of([&] { exhaustive_search_small(latin, enc("AB"), enc("CD"), 2); }) ==
        ErrorCode::BudgetExceeded);
  CHECK(code_of([&] { exhaustive_search_small(latin, enc("AB"), enc("C"), 1); }) ==
        ErrorCode::LengthMismatch);
  CHECK(code_of([&] { exhaustive_search_small(latin, SymbolString{}, SymbolString{}, 1); }) ==
        ErrorCode::EmptyMessage);
}
