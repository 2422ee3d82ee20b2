#include "swb/borcherds.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "swb/specfun.hpp"

namespace swb {

PeterssonValue delta_log(HPoint z) {
    if (!(z.y > 0.0)) throw std::domain_error("delta_log: y <= 0");
    double la = -2.0 * M_PI * z.y;
    for (long n = 1; 2.0 * M_PI * n * z.y < 18.0 * std::log(10.0) + 4.0; ++n) {
        cplx qn = std::exp(cplx(-2.0 * M_PI * n * z.y,
                                2.0 * M_PI * n * z.x));
        la += 24.0 * std::log(std::abs(1.0 - qn));
    }
    return {la, la + 6.0 * std::log(z.y)};
}

cplx WeaklyHolomorphicInput::coeff(CosetId c, const Rational& n) const {
    for (const auto& [e, v] : comp(c))
        if (e == n) return v;
    return {0.0, 0.0};
}

cplx WeaklyHolomorphicInput::value(CosetId c, HPoint tau) const {
    cplx sum(0.0, 0.0);
    for (const auto& [e, v] : comp(c))
        sum += v * std::exp(cplx(-2.0 * M_PI * tau.y, 2.0 * M_PI * tau.x) *
                            e.value());
    return sum;
}

void WeaklyHolomorphicInput::validate() const {
    auto frac4 = [](const Rational& r) {
        // 4 r mod 4, in [0,4)
        int64_t n = 4 * r.num;
        if (n % r.den != 0)
            throw std::invalid_argument("input form: exponent not in (1/4)Z");
        int64_t q = ((n / r.den) % 4 + 4) % 4;
        return q;
    };
    for (const auto& [e, v] : mu0)
        if (frac4(e) != 0)
            throw std::invalid_argument("input form: mu0 exponent not integral");
    long sign_plus = 0, sign_minus = 0;
    for (const auto& [e, v] : mu1) {
        int64_t q = frac4(e);
        if (q == 1)
            ++sign_plus;
        else if (q == 3)
            ++sign_minus;
        else
            throw std::invalid_argument(
                "input form: mu1 exponent not in +-1/4 + Z");
    }
    if (sign_plus > 0 && sign_minus > 0)
        throw std::invalid_argument(
            "input form: mixed mu1 exponent conventions");
    bool has_c0 = false;
    for (const auto& [e, v] : mu0)
        if (e == Rational{0, 1}) has_c0 = true;
    if (!has_c0)
        throw std::invalid_argument("input form: mu0 constant term missing");
}

namespace {

Rational parse_rational(const std::string& s) {
    size_t slash = s.find('/');
    Rational r;
    if (slash == std::string::npos) {
        r = {std::stoll(s), 1};
    } else {
        r = {std::stoll(s.substr(0, slash)),
             std::stoll(s.substr(slash + 1))};
    }
    r.normalize();
    return r;
}

std::string format_rational(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::vector<std::pair<Rational, cplx>> parse_coset(
    const nlohmann::json& arr) {
    std::vector<std::pair<Rational, cplx>> out;
    for (const auto& item : arr) {
        Rational e = parse_rational(item.at(0).get<std::string>());
        cplx c;
        if (item.at(1).is_array())
            c = cplx(item.at(1).at(0).get<double>(),
                     item.at(1).at(1).get<double>());
        else
            c = cplx(item.at(1).get<double>(), 0.0);
        out.emplace_back(e, c);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                  return a.first.value() < b.first.value();
              });
    return out;
}

}  // namespace

WeaklyHolomorphicInput load_input_form(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input form: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    WeaklyHolomorphicInput f;
    f.weight = parse_rational(j.at("weight").get<std::string>());
    f.mu0 = parse_coset(j.at("cosets").at("mu0"));
    f.mu1 = parse_coset(j.at("cosets").at("mu1"));
    f.validate();
    return f;
}

void save_input_form(const WeaklyHolomorphicInput& f,
                     const std::string& path) {
    nlohmann::json j;
    j["weight"] = format_rational(f.weight);
    auto dump = [](const std::vector<std::pair<Rational, cplx>>& comp) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [e, v] : comp) {
            if (v.imag() == 0.0)
                arr.push_back({format_rational(e), v.real()});
            else
                arr.push_back({format_rational(e),
                               nlohmann::json::array({v.real(), v.imag()})});
        }
        return arr;
    };
    j["cosets"]["mu0"] = dump(f.mu0);
    j["cosets"]["mu1"] = dump(f.mu1);
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

double borcherds_relation_rhs(const WeaklyHolomorphicInput& f,
                              double phi_value, double y) {
    if (!(y > 0.0)) throw std::domain_error("borcherds_relation_rhs: y <= 0");
    double c0 = f.c0_mu0().real();
    double gamma_prime_1 = -gamma_em;  // Gamma'(1)
    return -phi_value / 4.0 -
           (c0 / 2.0) * (std::log(y) + gamma_prime_1 / 2.0 +
                         0.5 * std::log(2.0 * M_PI));
}

}  // namespace swb
