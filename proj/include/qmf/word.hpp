#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qmf {

/// A finite string a = (a_1, ..., a_k) over the alphabet {0, ..., N-1}.
///
/// Words carry their own base N; combining words of different bases
/// throws std::invalid_argument.  The empty word is the identity for
/// concatenation and indexes the whole interval [0,1).
class Word {
public:
    Word() = default;
    Word(int N, std::vector<int> digits);

    static Word empty(int N) { return Word(N, {}); }

    /// Inverse of index(): a_1 is the most significant base-N digit.
    static Word from_index(int N, int k, std::uint64_t index);

    /// All N^k words of length k, in index order.
    static std::vector<Word> all(int N, int k);

    int base() const { return N_; }
    std::size_t length() const { return digits_.size(); }
    bool is_empty() const { return digits_.empty(); }
    const std::vector<int>& digits() const { return digits_; }
    int operator[](std::size_t i) const { return digits_[i]; }

    /// sum_i a_i N^(k-i); orders words like their N-adic intervals.
    std::uint64_t index() const;

    Word concat(const Word& other) const;
    Word prepend(int digit) const;
    Word append(int digit) const;
    Word reversed() const;
    Word prefix(std::size_t len) const;
    Word drop_front(std::size_t count = 1) const;

    /// Digits written out, comma separated when N > 10.
    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    int N_ = 2;
    std::vector<int> digits_;
};

/// Throws unless a and b share a base.
void require_same_base(const Word& a, const Word& b);

/// N^k as a 64-bit count; throws std::overflow_error if it does not fit.
std::uint64_t checked_power(int N, std::size_t k);

}  // namespace qmf
