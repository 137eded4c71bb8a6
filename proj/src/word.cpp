#include "qmf/word.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qmf {

Word::Word(int N, std::vector<int> digits) : N_(N), digits_(std::move(digits)) {
    if (N_ < 2) throw std::invalid_argument("Word: base must be >= 2");
    for (int d : digits_) {
        if (d < 0 || d >= N_) {
            throw std::invalid_argument("Word: digit " + std::to_string(d) + " outside [0," +
                                        std::to_string(N_) + ")");
        }
    }
}

std::uint64_t checked_power(int N, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(N)) {
            throw std::overflow_error("N^k does not fit in 64 bits");
        }
        r *= static_cast<std::uint64_t>(N);
    }
    return r;
}

Word Word::from_index(int N, int k, std::uint64_t index) {
    if (k < 0) throw std::invalid_argument("Word::from_index: negative length");
    if (index >= checked_power(N, static_cast<std::size_t>(k))) {
        throw std::invalid_argument("Word::from_index: index out of range");
    }
    std::vector<int> d(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        d[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(N));
        index /= static_cast<std::uint64_t>(N);
    }
    return Word(N, std::move(d));
}

std::vector<Word> Word::all(int N, int k) {
    std::uint64_t count = checked_power(N, static_cast<std::size_t>(k));
    std::vector<Word> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(from_index(N, k, i));
    return out;
}

std::uint64_t Word::index() const {
    checked_power(N_, digits_.size());
    std::uint64_t v = 0;
    for (int d : digits_) v = v * static_cast<std::uint64_t>(N_) + static_cast<std::uint64_t>(d);
    return v;
}

void require_same_base(const Word& a, const Word& b) {
    if (a.base() != b.base()) {
        throw std::invalid_argument("words over different alphabets (N=" + std::to_string(a.base()) +
                                    " vs N=" + std::to_string(b.base()) + ")");
    }
}

Word Word::concat(const Word& other) const {
    require_same_base(*this, other);
    std::vector<int> d = digits_;
    d.insert(d.end(), other.digits_.begin(), other.digits_.end());
    return Word(N_, std::move(d));
}

Word Word::prepend(int digit) const {
    std::vector<int> d;
    d.reserve(digits_.size() + 1);
    d.push_back(digit);
    d.insert(d.end(), digits_.begin(), digits_.end());
    return Word(N_, std::move(d));
}

Word Word::append(int digit) const {
    std::vector<int> d = digits_;
    d.push_back(digit);
    return Word(N_, std::move(d));
}

Word Word::reversed() const {
    std::vector<int> d(digits_.rbegin(), digits_.rend());
    return Word(N_, std::move(d));
}

Word Word::prefix(std::size_t len) const {
    if (len > digits_.size()) throw std::out_of_range("Word::prefix: length exceeds word");
    return Word(N_, std::vector<int>(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(len)));
}

Word Word::drop_front(std::size_t count) const {
    if (count > digits_.size()) throw std::out_of_range("Word::drop_front: count exceeds word");
    return Word(N_, std::vector<int>(digits_.begin() + static_cast<std::ptrdiff_t>(count), digits_.end()));
}

std::string Word::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (N_ > 10 && i > 0) s.push_back(',');
        s += std::to_string(digits_[i]);
    }
    return s;
}

}  // namespace qmf
