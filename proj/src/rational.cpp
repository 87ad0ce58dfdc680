#include "somf/rational.h"

namespace somf {

namespace {

// Renders c*s with c rational: "s", "-s", "2s", "s/2", "-3s/4".
std::string coeff_s(const Rational& c) {
    if (c == 1) return "s";
    if (c == -1) return "-s";
    if (is_integer(c)) return rat_str(c) + "s";
    std::string num = c.get_num().get_str();
    std::string den = c.get_den().get_str();
    if (num == "1") return "s/" + den;
    if (num == "-1") return "-s/" + den;
    return num + "s/" + den;
}

} // namespace

std::string affine_str(const Affine& f) {
    if (f.a == 0) return rat_str(f.b);
    std::string out = coeff_s(f.a);
    if (f.b == 0) return out;
    if (f.b > 0) return out + "+" + rat_str(f.b);
    return out + rat_str(f.b); // rat_str carries the minus sign
}

} // namespace somf
