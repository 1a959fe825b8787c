#include "lzbg/textgen.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <cmath>
#include <random>
#include <string_view>
#include <vector>

namespace lzbg::textgen {

std::string random_text(std::size_t n, unsigned sigma, std::uint64_t seed) {
    sigma = std::clamp(sigma, 1u, 256u);
    const unsigned base = sigma <= 26 ? 'a' : 0;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
    std::string s(n, '\0');
    for (char& c : s) c = static_cast<char>(base + pick(rng));
    return s;
}

std::string repetitive_text(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::string block = random_text(4096, 4, rng());
    std::uniform_int_distribution<unsigned> sym(0, 3);
    std::bernoulli_distribution mutate(0.0005);
    std::string s;
    s.reserve(n);
    while (s.size() < n) {
        const std::size_t take = std::min(block.size(), n - s.size());
        for (std::size_t i = 0; i < take; ++i)
            s.push_back(mutate(rng) ? static_cast<char>('a' + sym(rng)) : block[i]);
    }
    return s;
}

namespace {

constexpr std::string_view kCommon[] = {
    "the", "of", "and", "to", "a", "in", "that", "is", "was", "he", "for", "it", "with", "as",
    "his", "on", "be", "at", "by", "i", "this", "had", "not", "are", "but", "from", "or", "have",
    "an", "they", "which", "one", "you", "were", "her", "all", "she", "there", "would", "their",
    "we", "him", "been", "has", "when", "who", "will", "more", "no", "if", "out", "so", "said",
    "what", "up", "its", "about", "into", "than", "them", "can", "only", "other", "new", "some",
    "could", "time", "these", "two", "may", "then", "do", "first", "any", "my", "now", "such",
    "like", "our", "over", "man", "me", "even", "most", "made", "after", "also", "did", "many",
    "before", "must", "through", "back", "years", "where", "much", "your", "way", "well", "down",
    "should", "because", "each", "just", "those", "people", "how", "too", "little", "state",
    "good", "very", "make", "world", "still", "own", "see", "men", "work", "long"};

constexpr std::string_view kOnsets[] = {
    "b", "c", "d", "f", "g", "h", "l", "m", "n", "p", "r", "s", "t", "v", "w",
    "br", "ch", "cl", "st", "th", "tr", "pl", "sh", "gr"};
constexpr std::string_view kNuclei[] = {"a", "e", "i", "o", "u", "ea",
                                                      "ou", "ai", "ie", "y", "oo", "au"};
constexpr std::string_view kCodas[] = {"", "", "n", "r", "s", "t", "l",
                                                     "nd", "st", "ng", "rt", "ck", "m", "th"};

std::vector<std::string> make_vocabulary(std::size_t size, std::mt19937_64& rng) {
    std::vector<std::string> vocab(std::begin(kCommon), std::end(kCommon));
    std::uniform_int_distribution<std::size_t> syllables(1, 4);
    std::uniform_int_distribution<std::size_t> on(0, std::size(kOnsets) - 1);
    std::uniform_int_distribution<std::size_t> nu(0, std::size(kNuclei) - 1);
    std::uniform_int_distribution<std::size_t> co(0, std::size(kCodas) - 1);
    while (vocab.size() < size) {
        std::string w;
        const std::size_t k = syllables(rng);
        for (std::size_t i = 0; i < k; ++i) {
            w += kOnsets[on(rng)];
            w += kNuclei[nu(rng)];
        }
        w += kCodas[co(rng)];
        vocab.push_back(std::move(w));
    }
    return vocab;
}

} // namespace

std::string english_like_text(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::vector<std::string> vocab = make_vocabulary(60000, rng);
    std::vector<double> weights(vocab.size());
    for (std::size_t r = 0; r < weights.size(); ++r) weights[r] = 1.0 / std::pow(double(r + 1), 1.07);
    std::discrete_distribution<std::size_t> word(weights.begin(), weights.end());
    std::uniform_int_distribution<int> sentence_len(4, 28);
    std::uniform_int_distribution<int> percent(0, 99);

    std::string s;
    s.reserve(n + 64);
    int line = 0;
    while (s.size() < n) {
        const int len = sentence_len(rng);
        for (int i = 0; i < len; ++i) {
            std::string w = vocab[word(rng)];
            if (i == 0) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
            s += w;
            line += static_cast<int>(w.size()) + 1;
            if (i + 1 < len && percent(rng) < 7) s += ',';
            if (i + 1 < len) {
                if (line > 72) {
                    s += '\n';
                    line = 0;
                } else {
                    s += ' ';
                }
            }
        }
        const int p = percent(rng);
        s += p < 80 ? '.' : p < 90 ? '?' : '!';
        if (percent(rng) < 12) {
            s += "\n\n";
            line = 0;
        } else {
            s += ' ';
        }
    }
    s.resize(n);
    return s;
}

std::string fibonacci_word(std::size_t n) {
    std::string a = "a", b = "ab";
    while (b.size() < n) {
        std::string next = b + a;
        a = std::move(b);
        b = std::move(next);
    }
    b.resize(n);
    return b;
}

} // namespace lzbg::textgen
