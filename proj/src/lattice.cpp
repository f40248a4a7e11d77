#include "hbarlab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hbarlab/errors.hpp"

namespace hbarlab {

namespace {
constexpr double kPi = std::numbers::pi;

}  // namespace

PiValue PiValue::parse(const std::string& text) {
    const auto pos = text.find("pi");
    if (pos == std::string::npos) {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw ParameterOutOfRange("PiValue: cannot parse '" + text + "'");
        return decimal(v);
    }
    // [coef] pi [/den]
    std::string pre = text.substr(0, pos);
    std::string post = text.substr(pos + 2);
    long long num = 1, den = 1;
    bool neg = false;
    if (!pre.empty() && (pre[0] == '-' || pre[0] == '+')) {
        neg = pre[0] == '-';
        pre = pre.substr(1);
    }
    if (!pre.empty()) {
        if (pre.back() == '*') pre.pop_back();
        if (!pre.empty()) num = std::stoll(pre);
    }
    if (!post.empty()) {
        if (post[0] != '/') throw ParameterOutOfRange("PiValue: cannot parse '" + text + "'");
        den = std::stoll(post.substr(1));
    }
    if (den == 0) throw ParameterOutOfRange("PiValue: zero denominator in '" + text + "'");
    return pi_multiple(Rational(neg ? -num : num, den));
}

Rational PiValue::pi_coeff() const {
    if (!exact_) throw DomainError("PiValue: decimal value has no exact pi coefficient");
    return coeff_;
}

double PiValue::to_double() const {
    if (!exact_) return value_;
    return kPi * static_cast<double>(coeff_.numerator()) / static_cast<double>(coeff_.denominator());
}

std::string PiValue::str() const {
    if (!exact_) {
        std::ostringstream os;
        os.precision(12);
        os << value_;
        return os.str();
    }
    if (coeff_ == Rational(0)) return "0";
    std::ostringstream os;
    if (coeff_.numerator() != 1) os << coeff_.numerator() << "*";
    os << "pi";
    if (coeff_.denominator() != 1) os << "/" << coeff_.denominator();
    return os.str();
}

PiValue PiValue::operator+(const PiValue& o) const {
    if (exact_ && o.exact_) return PiValue(coeff_ + o.coeff_);
    return decimal(to_double() + o.to_double());
}

PiValue PiValue::operator-(const PiValue& o) const {
    if (exact_ && o.exact_) return PiValue(coeff_ - o.coeff_);
    return decimal(to_double() - o.to_double());
}

PiValue PiValue::operator*(long long s) const {
    if (exact_) return PiValue(coeff_ * s);
    return decimal(value_ * static_cast<double>(s));
}

bool PiValue::operator==(const PiValue& o) const {
    if (exact_ && o.exact_) return coeff_ == o.coeff_;
    return to_double() == o.to_double();
}

bool PiValue::operator<(const PiValue& o) const {
    if (exact_ && o.exact_) return coeff_ < o.coeff_;
    return to_double() < o.to_double();
}

std::string RelClass::str() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](long long c, const char* name) {
        if (c == 0) return;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c > 0 ? " + " : " - ");
        }
        const long long m = std::llabs(c);
        if (m != 1) os << m << " ";
        os << name;
        first = false;
    };
    term(q, "beta1");
    term(p, "alpha");
    term(r, "beta2");
    if (first) os << "0";
    return os.str();
}

std::vector<RelClass> enumerate_maslov2(int k) {
    if (k < 2) throw ParameterOutOfRange("enumerate_maslov2: k >= 2");
    // maslov = 2 forces p = 1 - q(k+1); positivity forces 0 <= q and
    // sigma_f = 1 - q >= 0, so q runs over {0, 1} and r over [0 .. qk]
    std::vector<RelClass> out;
    for (long long q = 0; 1 - q >= 0; ++q) {
        const long long p = 1 - q * (k + 1);
        for (long long r = 0; r <= q * k; ++r) out.push_back(RelClass{p, q, r, k});
    }
    std::sort(out.begin(), out.end(), [](const RelClass& a, const RelClass& b) {
        return std::tie(a.p, a.q, a.r) < std::tie(b.p, b.q, b.r);
    });
    return out;
}

namespace {

void check_upsilon_range(int k, const PiValue& a) {
    if (k < 2) throw ParameterOutOfRange("k-family: k >= 2");
    if (a.exact()) {
        if (a.pi_coeff() < Rational(1, k + 1) || !(a.pi_coeff() < Rational(1, k)))
            throw ParameterOutOfRange("k-family: a outside [pi/(k+1), pi/k), got " + a.str());
        return;
    }
    const double v = a.to_double();
    if (v < kPi / (k + 1) - 1e-12 || v >= kPi / k) {
        std::ostringstream os;
        os << "k-family: a = " << v << " outside [" << kPi / (k + 1) << ", " << kPi / k << ")";
        throw ParameterOutOfRange(os.str());
    }
}

bool upsilon_monotone(int k, const PiValue& a) {
    if (a.exact()) return a.pi_coeff() == Rational(1, k + 1);
    return std::abs(a.to_double() - kPi / (k + 1)) <= 1e-12;
}

}  // namespace

PiValue hbar_upsilon(int k, const PiValue& a) {
    check_upsilon_range(k, a);
    return PiValue::pi_fraction(1, 1) - a * k;
}

HbarSearch hbar_upsilon_search(int k, const PiValue& a) {
    check_upsilon_range(k, a);
    HbarSearch best;
    bool have = false;
    for (long long l = 1; l <= 12; ++l) {
        for (long long m = 0; m <= l; ++m) {
            // class with maslov 2l: p = l - (k+1) m, q = m; any n in [0..mk]
            const PiValue area = a * (l - m * (k + 1)) + PiValue::pi_fraction(m, 1);
            if (!have || area < best.min_area) {
                best.min_area = area;
                best.l = l;
                best.m = m;
                have = true;
            }
        }
    }
    std::ostringstream note;
    note << "box l <= 12 suffices: d(area)/dl = a = " << a.to_double()
         << " > 0 at fixed m, and the per-m minimum area(l=max(1,m)) = m*(pi - k a) grows in m"
            " since pi - k a = "
         << (PiValue::pi_fraction(1, 1) - a * k).to_double() << " > 0";
    best.box_note = note.str();
    return best;
}

bool InvariantReport::consistent() const {
    if (e_upper_finite) {
        if (!(e_lower <= e_upper)) return false;
        if (hbar_computed && !(hbar <= e_upper)) return false;
    }
    return true;
}

InvariantReport invariants_product(const std::vector<PiValue>& areas) {
    if (areas.empty()) throw ParameterOutOfRange("product torus: need at least one area");
    for (const auto& a : areas)
        if (!(PiValue::pi_fraction(0, 1) < a))
            throw ParameterOutOfRange("product torus: areas must be positive");
    PiValue amin = areas[0];
    bool all_equal = true;
    for (const auto& a : areas) {
        if (a < amin) amin = a;
        if (!(a == areas[0])) all_equal = false;
    }
    InvariantReport rep;
    rep.family = "product";
    {
        std::ostringstream os;
        os << "areas=(";
        for (std::size_t i = 0; i < areas.size(); ++i)
            os << (i ? "," : "") << areas[i].str();
        os << ")";
        rep.parameters = os.str();
    }
    rep.hbar = amin;
    rep.e_lower = amin;
    rep.e_upper = amin;
    rep.monotone = all_equal;
    rep.spheres_min_finite = false;
    rep.certificates = {"hbar = min area: computed (smallest factor disk)",
                        "e = min area: cited (standard-torus displacement)"};
    return rep;
}

InvariantReport invariants_chekanov_cpn(int n, const PiValue& a) {
    if (n < 2) throw ParameterOutOfRange("projective chekanov: n >= 2");
    const bool in_range =
        a.exact() ? (Rational(0) < a.pi_coeff() && a.pi_coeff() < Rational(1, n))
                  : (0.0 < a.to_double() && a.to_double() < kPi / n);
    if (!in_range)
        throw ParameterOutOfRange("projective chekanov: a must lie in (0, pi/n), got " + a.str());

    InvariantReport rep;
    rep.family = "chekanov-cpn";
    {
        std::ostringstream os;
        os << "n=" << n << " a=" << a.str();
        rep.parameters = os.str();
    }
    rep.spheres_min = PiValue::pi_fraction(1, 1);
    rep.spheres_min_finite = true;

    const PiValue monotone_area = PiValue::pi_fraction(1, n + 1);
    const bool small = a < monotone_area;
    rep.monotone = a == monotone_area;
    if (small) {
        rep.hbar = a;
        rep.e_lower = a;
        rep.e_upper = a;
        std::ostringstream chain;
        chain << "hbar lower: chart persistence min{" << a.str() << ", pi/" << (n + 1)
              << "} = " << a.str();
        rep.certificates = {"e upper: computed (narrow polydisk displacement, e <= a)",
                            chain.str(), "spheres: line area pi exceeds a",
                            "e lower: Chekanov bound e >= hbar (cited)"};
    } else {
        rep.e_upper_finite = false;
        rep.e_lower = a;  // any finite number is a lower bound here
        rep.hbar_computed = false;
        rep.certificates = {"e: +infinity, non-displaceable (cited folklore, nonzero Floer cohomology)",
                            "hbar: not computed for a >= pi/(n+1)"};
    }
    return rep;
}

InvariantReport invariants_upsilon(int k, const PiValue& a) {
    check_upsilon_range(k, a);
    InvariantReport rep;
    rep.family = "upsilon";
    {
        std::ostringstream os;
        os << "k=" << k << " a=" << a.str();
        rep.parameters = os.str();
    }
    rep.spheres_min_finite = false;
    rep.monotone = upsilon_monotone(k, a);
    rep.hbar = hbar_upsilon(k, a);
    rep.e_lower = rep.hbar;
    rep.e_upper = a;
    if (rep.monotone && a.exact()) {
        rep.e_upper = PiValue::pi_fraction(1, k + 1);
        rep.e_lower = rep.e_upper;
        rep.hbar = rep.e_upper;
    }
    rep.certificates = {
        "hbar = pi - k a: computed (positivity of intersections + product-torus limit)",
        "e upper: computed (narrow-curve displacement, e <= a)",
        "e lower: Chekanov bound e >= hbar (cited)"};
    if (rep.monotone)
        rep.certificates.push_back("monotone: all three coincide at pi/(k+1)");
    return rep;
}

bool check_property_cs(const std::vector<PiValue>& areas, const PiValue& capacity,
                       const std::optional<PiValue>& lambda_s) {
    if (areas.empty()) throw ParameterOutOfRange("property check: need areas");
    for (const auto& a : areas)
        if (!(PiValue::pi_fraction(0, 1) < a))
            throw ParameterOutOfRange("property check: areas must be positive");
    PiValue amin = areas[0], sum = PiValue::pi_fraction(0, 1);
    for (const auto& a : areas) {
        if (a < amin) amin = a;
        sum = sum + a;
    }
    const bool first = (amin + sum) < capacity;
    const bool second = !lambda_s.has_value() || amin < *lambda_s;
    return first && second;
}

InvariantReport fooo_fiber(double a, double x1, double x2) {
    if (!(a > 0.0)) throw ParameterOutOfRange("fooo_fiber: a > 0");
    if (std::abs(x1) > a || std::abs(x2) > 2.0 * a) {
        std::ostringstream os;
        os << "fooo_fiber: (" << x1 << ", " << x2 << ") outside [-" << a << ", " << a
           << "] x [-" << 2 * a << ", " << 2 * a << "]";
        throw OutOfPolytope(os.str());
    }
    InvariantReport rep;
    rep.family = "fooo-fiber";
    {
        std::ostringstream os;
        os.precision(12);
        os << "a=" << a << " x=(" << x1 << "," << x2 << ")";
        rep.parameters = os.str();
    }
    rep.spheres_min = PiValue::decimal(2.0 * a);
    rep.spheres_min_finite = true;

    // factor disk caps and sphere classes
    const double caps =
        std::min({a - std::abs(x1), a + std::abs(x1), 2 * a - std::abs(x2), 2 * a + std::abs(x2)});
    rep.hbar = PiValue::decimal(std::min(caps, 2.0 * a));
    rep.certificates.push_back("hbar: computed (factor caps and sphere classes)");

    const bool on_segment = x1 == 0.0 && std::abs(x2) <= a;
    if (!on_segment) {
        const double e = std::min(a - std::abs(x1), 2 * a - std::abs(x2));
        rep.e_lower = PiValue::decimal(e);
        rep.e_upper = PiValue::decimal(e);
        rep.certificates.push_back("e: factor displacement by the smaller cap (heuristic off the"
                                   " segment; equals hbar)");
    } else if (x2 == 0.0) {
        rep.e_upper_finite = false;
        rep.e_lower = rep.hbar;
        rep.certificates.push_back("e: +infinity, cited (the middle fiber is non-displaceable)");
    } else {
        rep.e_upper_finite = false;
        rep.e_lower = PiValue::decimal(2 * a - std::abs(x2));
        rep.certificates.push_back(
            "e lower: cited (Floer-theoretic bound 2a - |x2| for the segment fibers)");
        rep.certificates.push_back(
            "e upper: +infinity, heuristic extension of the non-displaceable segment");
    }
    // unequal sphere areas: no fiber of this manifold is monotone
    rep.monotone = false;
    return rep;
}

InvariantReport fooo_example_report(double a, double eps) {
    if (!(0.0 < eps && eps < a)) throw ParameterOutOfRange("fooo example: need 0 < eps < a");
    InvariantReport rep;
    rep.family = "fooo-example";
    {
        std::ostringstream os;
        os.precision(12);
        os << "a=" << a << " eps=" << eps << " fiber=(0," << a - eps << ")";
        rep.parameters = os.str();
    }
    rep.spheres_min = PiValue::decimal(2.0 * a);
    rep.spheres_min_finite = true;
    rep.hbar = PiValue::decimal(a);
    rep.e_lower = PiValue::decimal(a + eps);
    rep.e_upper = PiValue::decimal(a + eps);
    rep.monotone = false;
    rep.certificates = {
        "hbar = a: cited (semicontinuity limit through the neighboring fibers, sphere floor 2a)",
        "e = a + eps: cited lower bound; upper bound displaces the larger factor by its smaller"
        " cap"};
    return rep;
}

FoooScan fooo_grid_scan(double a, int nodes_per_axis) {
    if (nodes_per_axis < 3 || nodes_per_axis % 2 == 0)
        throw ParameterOutOfRange("fooo_grid_scan: need an odd node count >= 3");
    FoooScan scan;
    scan.nodes_per_axis = nodes_per_axis;
    const int m = (nodes_per_axis - 1) / 2;
    for (int i = -m; i <= m; ++i)
        for (int j = -m; j <= m; ++j) {
            const double x1 = a * i / m;
            const double x2 = 2.0 * a * j / m;
            const auto rep = fooo_fiber(a, x1, x2);
            const bool discontinuous = !rep.e_upper_finite || !(rep.e_upper == rep.hbar);
            const bool on_segment = i == 0 && std::abs(x2) <= a;
            if (discontinuous) ++scan.flagged;
            if (on_segment) ++scan.expected_segment_nodes;
            if (discontinuous != on_segment) scan.discontinuity_matches_segment = false;
            if (i != 0 && (!rep.e_upper_finite || !(rep.e_upper == rep.hbar)))
                scan.e_equals_hbar_off_segment = false;
        }
    return scan;
}

Classification classify_upsilon(int k1, const PiValue& a1, int k2, const PiValue& a2) {
    check_upsilon_range(k1, a1);
    check_upsilon_range(k2, a2);
    Classification c;
    if (k1 != k2) {
        c.distinct = true;
        std::ostringstream os;
        os << "k differs (" << k1 << " vs " << k2 << "): cited exotic-family invariant";
        c.certificate = os.str();
        return c;
    }
    const PiValue h1 = hbar_upsilon(k1, a1);
    const PiValue h2 = hbar_upsilon(k2, a2);
    if (!(h1 == h2)) {
        c.distinct = true;
        std::ostringstream os;
        os << "minimal disk area differs: " << h1.str() << " vs " << h2.str();
        c.certificate = os.str();
        return c;
    }
    c.distinct = false;
    c.certificate = "identical parameters";
    return c;
}

}  // namespace hbarlab
