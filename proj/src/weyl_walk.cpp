#include "somf/weyl_walk.h"

#include <cstddef>
#include <sstream>

#include "somf/errors.h"

namespace somf::weyl {

namespace {

void check_model(const RootModel& model, const AffineChar& lambda) {
    if ((int)lambda.size() != model.dim)
        throw DimensionMismatch("character has " + std::to_string(lambda.size()) +
                                " coordinates, model is " + std::to_string(model.dim) +
                                "-dimensional");
}

const VecQ& root_of(const RootModel& model, int j) {
    if (j < 1 || j > (int)model.simple.size())
        throw DomainError("no simple root with index " + std::to_string(j));
    return model.simple[j - 1];
}

Rational dot_qq(const VecQ& a, const VecQ& b) {
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational term = a[i] * b[i];
        acc += term;
    }
    return acc;
}

} // namespace

RootModel RootModel::f4() {
    RootModel m;
    m.dim = 4;
    m.simple = {
        {rat(0), rat(1), rat(-1), rat(0)},
        {rat(0), rat(0), rat(1), rat(-1)},
        {rat(0), rat(0), rat(0), rat(1)},
        {rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)},
    };
    return m;
}

RootModel RootModel::rank2_b() {
    RootModel m;
    m.dim = 2;
    m.simple = {
        {rat(1), rat(-1)},
        {rat(0), rat(1)},
    };
    return m;
}

RootModel RootModel::rank3_b() {
    RootModel m;
    m.dim = 3;
    m.simple = {
        {rat(1), rat(-1), rat(0)},
        {rat(0), rat(1), rat(-1)},
        {rat(0), rat(0), rat(1)},
    };
    return m;
}

Affine inner(const AffineChar& lambda, const VecQ& v) {
    if (lambda.size() != v.size()) throw DimensionMismatch("inner: size mismatch");
    Affine acc;
    for (std::size_t i = 0; i < v.size(); ++i) acc = acc + lambda[i] * v[i];
    return acc;
}

AffineChar reflect(const RootModel& model, const AffineChar& lambda, int j) {
    check_model(model, lambda);
    const VecQ& alpha = root_of(model, j);
    Rational len2 = dot_qq(alpha, alpha);
    Affine coef = inner(lambda, alpha) * (Rational(2) / len2);
    AffineChar out = lambda;
    for (int i = 0; i < model.dim; ++i) out[i] = out[i] - coef * alpha[i];
    return out;
}

std::vector<WalkStep> walk(const RootModel& model, const AffineChar& start,
                           const std::vector<int>& word) {
    check_model(model, start);
    std::vector<WalkStep> steps;
    steps.reserve(word.size());
    AffineChar cur = start;
    for (int j : word) {
        WalkStep step;
        step.j = j;
        step.param = inner(cur, root_of(model, j));
        cur = reflect(model, cur, j);
        step.after = cur;
        steps.push_back(std::move(step));
    }
    return steps;
}

std::vector<Affine> to_simple_root_coords(const RootModel& model, const AffineChar& lambda) {
    check_model(model, lambda);
    if ((int)model.simple.size() != model.dim)
        throw SingularBasis("simple roots do not form a square basis");
    // Columns of the system are the simple roots; solve once for the
    // s-coefficients and once for the constants.
    MatQ basis(model.dim, VecQ(model.dim));
    for (int i = 0; i < model.dim; ++i)
        for (int j = 0; j < model.dim; ++j) basis[i][j] = model.simple[j][i];
    VecQ rhs_a(model.dim), rhs_b(model.dim);
    for (int i = 0; i < model.dim; ++i) {
        rhs_a[i] = lambda[i].a;
        rhs_b[i] = lambda[i].b;
    }
    VecQ ca = solve_linear_exact(basis, rhs_a);
    VecQ cb = solve_linear_exact(basis, rhs_b);
    std::vector<Affine> out(model.dim);
    for (int i = 0; i < model.dim; ++i) out[i] = Affine(ca[i], cb[i]);
    return out;
}

bool jacquet_all_negative(const RootModel& model, const std::vector<AffineChar>& lambdas,
                          const Rational& s0) {
    for (const AffineChar& lambda : lambdas) {
        std::vector<Affine> coords = to_simple_root_coords(model, lambda);
        for (const Affine& c : coords) {
            Rational value = c.eval(s0);
            if (value >= 0) return false;
        }
    }
    return true;
}

namespace {

std::string char_str(const AffineChar& lambda) {
    std::string out = "(";
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i) out += ", ";
        out += lambda[i].str();
    }
    out += ")";
    return out;
}

} // namespace

std::string transcript(const RootModel& model, const AffineChar& start,
                       const std::vector<int>& word) {
    std::ostringstream out;
    out << "start; " << char_str(start) << "\n";
    for (const WalkStep& step : walk(model, start, word))
        out << "[" << step.j << "]; " << char_str(step.after) << "; " << step.param.str() << "\n";
    return out.str();
}

AffineChar reflect_parameter(const AffineChar& start, const Rational& sigma) {
    AffineChar out = start;
    for (Affine& c : out) {
        Rational b2 = c.a * sigma + c.b;
        c = Affine(-c.a, b2);
    }
    return out;
}

AffineChar lambda_f4() {
    return {Affine(rat(1), rat(-23)), Affine(rat(1), rat(-6)), Affine(rat(0), rat(-5)),
            Affine(rat(0), rat(-4))};
}

AffineChar lambda_rank2(const Rational& m) {
    Rational half = m / 2;
    return {Affine(Rational(1), Rational(-1) - half), Affine(Rational(0), -half)};
}

AffineChar lambda_rank3(const Rational& m) {
    Rational half = m / 2;
    return {Affine(Rational(1), Rational(-2) - half), Affine(Rational(0), Rational(-1) - half),
            Affine(Rational(0), -half)};
}

VecQ delta_rank2(const Rational& m) { return {m + 2, m}; }

VecQ delta_rank3(const Rational& m) { return {m + 4, m + 2, m}; }

std::vector<int> word_f4() { return {1, 2, 3, 2, 1, 4, 3, 2, 3, 4, 1, 2, 3, 2, 1}; }

std::vector<int> word_rank2() { return {1, 2, 1}; }

std::vector<int> word_rank3() { return {1, 2, 3, 2, 1}; }

} // namespace somf::weyl
