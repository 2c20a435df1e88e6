#include "potcyc/degree_sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "potcyc/errors.hpp"

namespace potcyc {

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    for (int t : terms_) {
        if (t < 0) throw precondition_error("degree sequence entries must be nonnegative");
    }
    std::sort(terms_.begin(), terms_.end(), std::greater<int>());
}

int DegreeSequence::at(int i) const {
    if (i < 1 || i > n()) throw precondition_error("sequence index out of range");
    return terms_[static_cast<std::size_t>(i - 1)];
}

long long DegreeSequence::sum() const {
    return std::accumulate(terms_.begin(), terms_.end(), 0LL);
}

std::string DegreeSequence::render() const {
    std::string out;
    std::size_t i = 0;
    while (i < terms_.size()) {
        std::size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(terms_[i]);
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

namespace {

long long parse_int(const std::string& token, std::size_t from, std::size_t to) {
    if (from >= to) throw precondition_error("malformed sequence token '" + token + "'");
    long long value = 0;
    auto res = std::from_chars(token.data() + from, token.data() + to, value);
    if (res.ec != std::errc() || res.ptr != token.data() + to)
        throw precondition_error("malformed sequence token '" + token + "'");
    return value;
}

} // namespace

DegreeSequence parse_sequence(const std::string& text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) throw precondition_error("empty degree sequence");

    std::vector<int> terms;
    std::size_t pos = 0;
    while (pos <= compact.size()) {
        std::size_t comma = compact.find(',', pos);
        if (comma == std::string::npos) comma = compact.size();
        std::string token = compact.substr(pos, comma - pos);
        if (token.empty()) throw precondition_error("empty item in degree sequence");
        if (token[0] == '-') throw precondition_error("negative degree in '" + token + "'");
        std::size_t caret = token.find('^');
        long long value = parse_int(token, 0, caret == std::string::npos ? token.size() : caret);
        long long count = 1;
        if (caret != std::string::npos) {
            if (caret + 1 < token.size() && token[caret + 1] == '-')
                throw precondition_error("run length must be positive in '" + token + "'");
            count = parse_int(token, caret + 1, token.size());
            if (count < 1) throw precondition_error("run length must be positive in '" + token + "'");
        }
        if (value > 1'000'000 || count > 1'000'000)
            throw precondition_error("degree sequence item too large: '" + token + "'");
        for (long long i = 0; i < count; ++i) terms.push_back(static_cast<int>(value));
        if (comma == compact.size()) break;
        pos = comma + 1;
    }
    return DegreeSequence(std::move(terms));
}

int f_index(const DegreeSequence& seq) {
    if (seq.empty()) throw precondition_error("f_index requires a nonempty sequence");
    int f = 0;
    for (int i = 1; i <= seq.n(); ++i) {
        if (seq[i] >= i)
            f = i;
        else
            break;
    }
    return f;
}

bool is_graphic(const DegreeSequence& seq) {
    const int n = seq.n();
    if (n == 0) return true;
    if (seq[1] > n - 1) return false;
    if (!seq.even_sum()) return false;

    const int cutoff = f_index(seq);
    for (int t = 1; t <= cutoff; ++t) {
        long long lhs = 0;
        for (int i = 1; i <= t; ++i) lhs += seq[i];
        long long rhs = static_cast<long long>(t) * (t - 1);
        for (int i = t + 1; i <= n; ++i) rhs += std::min(t, seq[i]);
        if (lhs > rhs) return false;
    }
    return true;
}

DegreeSequence lay_off(const DegreeSequence& seq, int k) {
    const int n = seq.n();
    if (k < 1 || k > n) throw precondition_error("lay_off index out of range");
    const int value = seq[k];
    if (value > n - 1)
        throw precondition_error("cannot lay off d_" + std::to_string(k) + " = " +
                                 std::to_string(value) + " > n-1");

    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n; ++i)
        if (i != k) rest.push_back(seq[i]);
    // rest is still non-increasing, so its d_k largest terms are the first
    // `value` entries; decrementing a prefix is the leftmost tie-break.
    if (value > 0 && rest[static_cast<std::size_t>(value - 1)] < 1)
        throw precondition_error("cannot lay off d_" + std::to_string(k) +
                                 ": fewer than d_k positive remaining terms");
    for (int i = 0; i < value; ++i) rest[static_cast<std::size_t>(i)] -= 1;
    return DegreeSequence(std::move(rest));
}

bool check_posa(const DegreeSequence& seq, int ell) {
    return posa_violation_index(seq, ell) == 0;
}

int posa_violation_index(const DegreeSequence& seq, int ell) {
    if (ell < 3) throw precondition_error("cycle length must be at least 3");
    if (ell > seq.n()) throw precondition_error("cycle length exceeds sequence length");
    const int bound = (ell + 1) / 2 - 1;
    for (int i = 1; i <= bound; ++i)
        if (seq[ell + 1 - i] < i + 1) return ell + 1 - i;
    return 0;
}

bool check_dirac(const DegreeSequence& seq, int ell) {
    if (ell < 3) throw precondition_error("cycle length must be at least 3");
    if (ell > seq.n()) throw precondition_error("cycle length exceeds sequence length");
    return seq[ell] >= (ell + 1) / 2;
}

} // namespace potcyc
