#include "qws/pauli.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace qws {

void PauliString::set_x(uint32_t q, bool v) {
    if (q >= n_) throw std::out_of_range("PauliString: qubit out of range");
    uint64_t m = 1ULL << (q & 63);
    if (v)
        x_[q >> 6] |= m;
    else
        x_[q >> 6] &= ~m;
}

void PauliString::set_z(uint32_t q, bool v) {
    if (q >= n_) throw std::out_of_range("PauliString: qubit out of range");
    uint64_t m = 1ULL << (q & 63);
    if (v)
        z_[q >> 6] |= m;
    else
        z_[q >> 6] &= ~m;
}

void PauliString::set_pauli(uint32_t q, int p) {
    bool hadY = x_bit(q) && z_bit(q);
    set_x(q, p & 1);
    set_z(q, (p >> 1) & 1);
    bool hasY = (p == 3);
    // Keep the operator Hermitian with an unchanged sign: Y contributes a
    // factor i in the X^x Z^z normal form.
    if (hasY && !hadY) phase_ = (phase_ + 1) & 3;
    if (!hasY && hadY) phase_ = (phase_ + 3) & 3;
}

uint32_t PauliString::weight() const {
    uint32_t w = 0;
    for (size_t i = 0; i < x_.size(); ++i) w += std::popcount(x_[i] | z_[i]);
    return w;
}

int PauliString::sign() const {
    uint32_t ycount = 0;
    for (size_t i = 0; i < x_.size(); ++i) ycount += std::popcount(x_[i] & z_[i]);
    int d = static_cast<int>((phase_ - ycount) & 3);
    if (d == 0) return +1;
    if (d == 2) return -1;
    throw std::logic_error("PauliString: imaginary phase at API boundary");
}

void PauliString::set_sign(int s) {
    if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
    uint32_t ycount = 0;
    for (size_t i = 0; i < x_.size(); ++i) ycount += std::popcount(x_[i] & z_[i]);
    phase_ = static_cast<uint8_t>((ycount + (s == -1 ? 2 : 0)) & 3);
}

PauliString PauliString::operator*(const PauliString& other) const {
    if (n_ != other.n_) throw std::invalid_argument("PauliString: size mismatch");
    PauliString r(n_);
    uint32_t anti = 0;
    for (size_t i = 0; i < x_.size(); ++i) {
        // Reordering Z^z1 past X^x2 contributes (-1)^{|z1 & x2|}.
        anti += std::popcount(z_[i] & other.x_[i]);
        r.x_[i] = x_[i] ^ other.x_[i];
        r.z_[i] = z_[i] ^ other.z_[i];
    }
    r.phase_ = static_cast<uint8_t>((phase_ + other.phase_ + 2 * anti) & 3);
    return r;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (n_ != other.n_) throw std::invalid_argument("PauliString: size mismatch");
    uint32_t anti = 0;
    for (size_t i = 0; i < x_.size(); ++i)
        anti += std::popcount((x_[i] & other.z_[i]) ^ (z_[i] & other.x_[i]));
    return (anti & 1) == 0;
}

std::string PauliString::str() const {
    std::string out;
    if (sign() == -1) out += '-';
    static const char* names = "IXZY";
    bool any = false;
    for (uint32_t q = 0; q < n_; ++q) {
        int p = pauli_at(q);
        if (p == 0) continue;
        out += names[p];
        out += std::to_string(q);
        any = true;
    }
    if (!any) out += 'I';
    return out;
}

PauliString PauliString::parse(uint32_t n, const std::string& text) {
    PauliString p(n);
    size_t i = 0;
    int sign = +1;
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -sign;
        ++i;
    }
    while (i < text.size()) {
        char c = static_cast<char>(std::toupper(text[i]));
        if (c == 'I') {
            ++i;
            continue;
        }
        if (c != 'X' && c != 'Y' && c != 'Z')
            throw std::invalid_argument("PauliString: bad character in '" + text + "'");
        ++i;
        if (i >= text.size() || !std::isdigit(text[i]))
            throw std::invalid_argument("PauliString: missing qubit index in '" + text + "'");
        size_t j = i;
        while (j < text.size() && std::isdigit(text[j])) ++j;
        uint32_t q = static_cast<uint32_t>(std::stoul(text.substr(i, j - i)));
        if (q >= n) throw std::out_of_range("PauliString: qubit index out of range");
        int cur = p.pauli_at(q);
        int add = (c == 'X') ? 1 : (c == 'Z') ? 2 : 3;
        if (cur != 0) throw std::invalid_argument("PauliString: repeated qubit in '" + text + "'");
        p.set_pauli(q, add);
        i = j;
    }
    if (sign == -1) p.set_sign(-1);
    return p;
}

PauliString pauli_x(uint32_t n, uint32_t q) {
    PauliString p(n);
    p.set_pauli(q, 1);
    return p;
}

PauliString pauli_y(uint32_t n, uint32_t q) {
    PauliString p(n);
    p.set_pauli(q, 3);
    return p;
}

PauliString pauli_z(uint32_t n, uint32_t q) {
    PauliString p(n);
    p.set_pauli(q, 2);
    return p;
}

} // namespace qws
