#include "braidalex/fox.hpp"

#include <utility>

#include "braidalex/alexander.hpp"

namespace braidalex {

FreeWord FreeWord::inverse() const {
    std::vector<FreeLetter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back({it->symbol, -it->sign});
    return FreeWord(std::move(out));
}

FreeWord FreeWord::reduced() const {
    std::vector<FreeLetter> stack;
    stack.reserve(letters_.size());
    for (const FreeLetter& l : letters_) {
        if (!stack.empty() && stack.back().symbol == l.symbol && stack.back().sign == -l.sign)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return FreeWord(std::move(stack));
}

std::string to_string(const FreeWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const FreeLetter& l : w.letters()) {
        if (!out.empty()) out += " ";
        out += l.symbol == kAxisSymbol ? "x" : "x" + std::to_string(l.symbol);
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

FreeWord apply_sigma(const FreeWord& word, int i, int sign, int strands) {
    if (i < 1 || i > strands - 1)
        throw IndexOutOfRange("apply_sigma: generator index " + std::to_string(i) +
                              " out of range for " + std::to_string(strands) + " strands");
    FreeWord image_lo, image_hi;  // images of x_i and x_{i+1}
    if (sign > 0) {
        image_lo = FreeWord::generator(i + 1);
        image_hi = FreeWord({{i + 1, +1}, {i, +1}, {i + 1, -1}});
    } else {
        image_lo = FreeWord({{i, -1}, {i + 1, +1}, {i, +1}});
        image_hi = FreeWord::generator(i);
    }
    FreeWord out;
    for (const FreeLetter& l : word.letters()) {
        const FreeWord* image = nullptr;
        if (l.symbol == i)
            image = &image_lo;
        else if (l.symbol == i + 1)
            image = &image_hi;
        if (image == nullptr) {
            out.append(l.symbol, l.sign);
        } else if (l.sign > 0) {
            out.append(*image);
        } else {
            out.append(image->inverse());
        }
    }
    return out.reduced();
}

FreeWord braid_automorphism(const BraidWord& w, int generator) {
    if (generator < 1 || generator > w.strands)
        throw IndexOutOfRange("braid_automorphism: no meridian x" + std::to_string(generator));
    FreeWord word = FreeWord::generator(generator);
    // last letter first, so that concatenating braid words composes the maps
    for (std::size_t r = w.length(); r > 0; --r) {
        const BraidLetter& letter = w.letters[r - 1];
        word = apply_sigma(word, letter.index, letter.sign, w.strands);
    }
    return word;
}

namespace {

// Inverse of an invertible monomial +/-(monomial).
LaurentPoly unit_inverse(const LaurentPoly& u) {
    if (u.term_count() != 1 || (u.leading_coeff() != 1 && u.leading_coeff() != -1))
        throw std::invalid_argument("phi image is not an invertible monomial: " + to_string(u));
    return LaurentPoly::monomial(u.leading_coeff(), exp_neg(u.leading_monomial()));
}

}  // namespace

LaurentPoly phi_eval(const FreeWord& word, const PhiMap& phi) {
    LaurentPoly out(1);
    for (const FreeLetter& l : word.letters()) {
        const LaurentPoly& im = phi.at(l.symbol);
        out *= l.sign > 0 ? im : unit_inverse(im);
    }
    return out;
}

LaurentPoly fox_derivative_eval(const FreeWord& word, int wrt, const PhiMap& phi) {
    const FreeWord reduced = word.reduced();
    LaurentPoly result;
    LaurentPoly prefix(1);
    for (const FreeLetter& l : reduced.letters()) {
        const LaurentPoly& im = phi.at(l.symbol);
        if (l.sign > 0) {
            if (l.symbol == wrt) result += prefix;
            prefix *= im;
        } else {
            LaurentPoly inv = unit_inverse(im);
            if (l.symbol == wrt) result -= prefix * inv;
            prefix *= inv;
        }
    }
    return result;
}

LaurentPoly oracle_axis_polynomial(const BraidWord& w) {
    const int n = w.strands;

    // phi sends each meridian to its identified component variable
    auto ident = identification_map(permutation_of(w));
    PhiMap phi;
    phi.emplace(kAxisSymbol, LaurentPoly::variable(VarId::axis()));
    for (int j = 1; j <= n; ++j)
        phi.emplace(j, LaurentPoly::variable(ident.at(VarId::t(j))));

    // Fox matrix of the relations F_beta(x_i) = x^{-1} x_i x over the
    // meridian columns; the axis column is the deleted one.
    PolyMatrix m(n, n);
    for (int i = 1; i <= n; ++i) {
        FreeWord lhs = braid_automorphism(w, i);
        FreeWord rhs({{kAxisSymbol, -1}, {i, +1}, {kAxisSymbol, +1}});
        for (int j = 1; j <= n; ++j)
            m.at(i - 1, j - 1) =
                fox_derivative_eval(lhs, j, phi) - fox_derivative_eval(rhs, j, phi);
    }

    LaurentPoly det = determinant(m);
    LaurentPoly divisor = LaurentPoly(1) - LaurentPoly::variable(VarId::axis());
    try {
        return canonicalize(exact_divide(det, divisor));
    } catch (const NotDivisible&) {
        throw DivisibilityFailure("oracle determinant " + to_string(det) +
                                  " is not divisible by 1 - x");
    }
}

}  // namespace braidalex
