#include "qmf/nadic.hpp"

#include <stdexcept>

namespace qmf {

NadicInterval::NadicInterval(int N, Word digits) : N_(N), digits_(std::move(digits)) {
    if (N_ < 2 || N_ > kMaxNadicBase) {
        throw std::invalid_argument("NadicInterval: base must be in [2," + std::to_string(kMaxNadicBase) + "]");
    }
    if (digits_.base() != N_) throw std::invalid_argument("NadicInterval: word base differs from N");
    if (level() > kMaxNadicLevel) {
        throw std::invalid_argument("NadicInterval: level exceeds " + std::to_string(kMaxNadicLevel));
    }
    for (int d : digits_.digits()) numerator_ = numerator_ * N_ + d;
}

Int128 NadicInterval::denominator() const { return ipow(N_, level()); }

bool NadicInterval::contains(const NadicInterval& other) const {
    if (other.N_ != N_ || other.level() < level()) return false;
    return other.digits_.prefix(digits_.length()) == digits_;
}

std::string NadicInterval::to_string() const {
    const std::string q = qmf::to_string(denominator());
    return "[" + qmf::to_string(numerator_) + "/" + q + ", " + qmf::to_string(numerator_ + 1) + "/" + q + ")";
}

NadicInterval interval(int N, const Word& digits) { return NadicInterval(N, digits); }

NadicInterval interval(int N, const std::vector<int>& digits) { return NadicInterval(N, Word(N, digits)); }

std::vector<NadicInterval> children(const NadicInterval& J) {
    std::vector<NadicInterval> out;
    out.reserve(static_cast<std::size_t>(J.base()));
    for (int i = 0; i < J.base(); ++i) out.emplace_back(J.base(), J.digits().append(i));
    return out;
}

std::vector<NadicInterval> partition(int N, int k) {
    std::vector<NadicInterval> out;
    for (auto& w : Word::all(N, k)) out.emplace_back(N, std::move(w));
    return out;
}

NadicInterval cylinder_to_interval(const Cylinder& c) { return interval(c.N, c.prefix); }

IfsSystem base_ifs(int N) {
    if (N < 2) throw std::invalid_argument("base_ifs: N must be >= 2");
    IfsSystem ifs{N, {}};
    for (int i = 0; i < N; ++i) ifs.translations.push_back(i);
    return ifs;
}

IfsSystem cantor_ifs() { return IfsSystem{3, {0, 2}}; }

namespace {

void check_ifs(const IfsSystem& ifs) {
    if (ifs.scale < 2 || ifs.translations.size() < 2) throw std::invalid_argument("IfsSystem: degenerate system");
    for (int t : ifs.translations) {
        if (t < 0 || t >= ifs.scale) throw std::invalid_argument("IfsSystem: translation outside [0, scale)");
    }
}

}  // namespace

NadicInterval sigma_map(const IfsSystem& ifs, const Word& a, const NadicInterval& J) {
    check_ifs(ifs);
    if (a.base() != ifs.branches()) throw std::invalid_argument("sigma_map: word alphabet differs from IFS");
    if (J.base() != ifs.scale) throw std::invalid_argument("sigma_map: interval base differs from IFS scale");
    std::vector<int> digits;
    digits.reserve(a.length() + J.digits().length());
    for (int d : a.digits()) digits.push_back(ifs.translations[static_cast<std::size_t>(d)]);
    digits.insert(digits.end(), J.digits().digits().begin(), J.digits().digits().end());
    return interval(ifs.scale, digits);
}

NadicInterval sigma_map(const IfsSystem& ifs, const Word& a) {
    return sigma_map(ifs, a, interval(ifs.scale, Word::empty(ifs.scale)));
}

Rational sigma_forward(const IfsSystem& ifs, const Rational& x) {
    if (x < Rational(0) || !(x < Rational(1))) throw std::domain_error("sigma_forward: x outside [0,1)");
    Rational y = Rational(ifs.scale) * x;
    return y - Rational(y.floor());
}

Rational sigma_branch(const IfsSystem& ifs, int i, const Rational& x) {
    check_ifs(ifs);
    if (i < 0 || i >= ifs.branches()) throw std::invalid_argument("sigma_branch: branch out of range");
    return (x + Rational(ifs.translations[static_cast<std::size_t>(i)])) / Rational(ifs.scale);
}

std::optional<NadicInterval> branch_preimage(const IfsSystem& ifs, int i, const NadicInterval& J) {
    check_ifs(ifs);
    if (i < 0 || i >= ifs.branches()) throw std::invalid_argument("branch_preimage: branch out of range");
    if (J.base() != ifs.scale) throw std::invalid_argument("branch_preimage: interval base differs from IFS scale");
    if (J.level() == 0) return J;
    if (J.digits()[0] != ifs.translations[static_cast<std::size_t>(i)]) return std::nullopt;
    return NadicInterval(J.base(), J.digits().drop_front());
}

std::vector<NadicInterval> sigma_preimage(const IfsSystem& ifs, const NadicInterval& J) {
    check_ifs(ifs);
    std::vector<NadicInterval> out;
    for (int i = 0; i < ifs.branches(); ++i) out.push_back(sigma_map(ifs, Word(ifs.branches(), {i}), J));
    return out;
}

bool is_cantor_word(const Word& a) {
    for (int d : a.digits()) {
        if (d != 0 && d != 2) return false;
    }
    return true;
}

}  // namespace qmf
