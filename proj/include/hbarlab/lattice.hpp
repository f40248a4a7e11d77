#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

namespace hbarlab {

using Rational = boost::rational<long long>;

/// An area value that is either an exact rational multiple of pi or a plain
/// decimal. Arithmetic stays exact as long as every operand is exact; any
/// decimal operand demotes the result. Keeps the monotone case and the
/// class-table identities exact instead of approximate.
class PiValue {
 public:
    PiValue() : exact_(true), coeff_(0) {}
    static PiValue pi_multiple(Rational r) { return PiValue(r); }
    static PiValue pi_fraction(long long num, long long den) { return PiValue(Rational(num, den)); }
    static PiValue decimal(double v) {
        PiValue p;
        p.exact_ = false;
        p.value_ = v;
        return p;
    }
    /// Accepts "pi", "2pi/3", "-pi/4", "3/5pi", or a plain decimal.
    static PiValue parse(const std::string& text);

    bool exact() const { return exact_; }
    Rational pi_coeff() const;
    double to_double() const;
    std::string str() const;

    PiValue operator+(const PiValue& o) const;
    PiValue operator-(const PiValue& o) const;
    PiValue operator*(long long s) const;
    friend PiValue operator*(long long s, const PiValue& v) { return v * s; }
    PiValue operator-() const { return *this * -1; }

    bool operator==(const PiValue& o) const;
    bool operator<(const PiValue& o) const;
    bool operator<=(const PiValue& o) const { return *this < o || *this == o; }

 private:
    explicit PiValue(Rational r) : exact_(true), coeff_(r) {}
    bool exact_ = true;
    Rational coeff_{0};
    double value_ = 0.0;
};

/// An integer class in the (alpha, beta_1, beta_2) basis of the relative
/// second homology of the k-family torus, with its five linear functionals.
struct RelClass {
    long long p = 0, q = 0, r = 0;
    int k = 2;

    long long maslov() const { return 2 * p + q * (2 * k + 2); }
    long long plane13() const { return r; }
    long long plane12() const { return q * k - r; }
    long long sigma_f() const { return p + q * k; }
    PiValue area(const PiValue& a) const { return a * p + PiValue::pi_fraction(q, 1); }

    bool operator==(const RelClass& o) const = default;
    std::string str() const;  ///< e.g. "beta1 - 2 alpha + beta2"
};

/// All Maslov-2 classes meeting the positivity constraints
/// plane13 >= 0, plane12 >= 0, sigma_f >= 0, sorted lexicographically by
/// (p, q, r). There are k + 2 of them.
std::vector<RelClass> enumerate_maslov2(int k);

/// Closed form pi - k a for the minimal disk area on the k-family torus;
/// requires pi/(k+1) <= a < pi/k.
PiValue hbar_upsilon(int k, const PiValue& a);

/// Independent route: minimize the area p a + q pi over classes of Maslov
/// index >= 2 meeting the positivity constraints, scanned over the
/// reparametrized box l in [1..12], m in [0..l], n in [0..mk]
/// (l = p + (k+1) q, m = q, n = r). Beyond the box the area grows linearly
/// in l and m with positive coefficients; box_note records that bound.
struct HbarSearch {
    PiValue min_area;
    long long l = 0, m = 0;  ///< minimizer (any n in [0..mk] realizes it)
    std::string box_note;
};
HbarSearch hbar_upsilon_search(int k, const PiValue& a);

/// Invariant bounds for one Lagrangian with provenance notes. e_lower and
/// hbar carry citations where the underlying result is Floer-theoretic;
/// nothing of that kind is recomputed here.
struct InvariantReport {
    std::string family;
    std::string parameters;
    PiValue hbar;
    bool hbar_computed = true;
    PiValue e_lower;
    PiValue e_upper;             ///< meaningful only when e_upper_finite
    bool e_upper_finite = true;  ///< false encodes +infinity
    bool monotone = false;
    PiValue spheres_min;  ///< minimal sphere area of the ambient space
    bool spheres_min_finite = false;
    std::vector<std::string> certificates;

    bool consistent() const;  ///< e_lower <= e_upper and hbar <= e_upper
};

/// Product torus: everything equals the minimal factor area.
InvariantReport invariants_product(const std::vector<PiValue>& areas);

/// Chekanov torus in CP^n: below the monotone area both invariants equal a;
/// from the monotone area on, the torus is non-displaceable (recorded as a
/// citation) and the minimal disk area is left uncomputed.
InvariantReport invariants_chekanov_cpn(int n, const PiValue& a);

/// The k-family torus: hbar = pi - k a always; the displacement energy is
/// pinned to [pi - k a, a], collapsing to pi/(k+1) in the monotone case.
InvariantReport invariants_upsilon(int k, const PiValue& a);

/// The standard-torus criterion: strict inequalities
/// min(areas) + sum(areas) < A and min(areas) < lambda_S.
bool check_property_cs(const std::vector<PiValue>& areas, const PiValue& capacity,
                       const std::optional<PiValue>& lambda_s);

/// Toric fibers of the product of two spheres with areas 2a and 4a over the
/// polytope [-a, a] x [-2a, 2a]. Off the segment {x1 = 0, |x2| <= a} both
/// invariants equal the least factor-displacement cost; on it the fiber is
/// reported non-displaceable (the heuristic extension of the segment
/// behavior; the report says computed vs cited for each bound).
InvariantReport fooo_fiber(double a, double x1, double x2);

/// The distinguished example fiber (0, a - eps): hbar = a and
/// e = a + eps, both by citation.
InvariantReport fooo_example_report(double a, double eps);

/// Grid scan of the fiber reports over the polytope with exact rational
/// node placement (x1 = a i/m, x2 = 2a j/m). A node is flagged discontinuous
/// when its reported upper displacement bound differs from its minimal disk
/// area as extended reals.
struct FoooScan {
    int nodes_per_axis = 0;
    int flagged = 0;
    int expected_segment_nodes = 0;
    bool discontinuity_matches_segment = true;
    bool e_equals_hbar_off_segment = true;
};
FoooScan fooo_grid_scan(double a, int nodes_per_axis);

struct Classification {
    bool distinct = false;
    std::string certificate;
};

/// No two tori of the k-family with distinct parameters are equivalent:
/// different k by citation, equal k by comparing the minimal disk areas.
Classification classify_upsilon(int k1, const PiValue& a1, int k2, const PiValue& a2);

}  // namespace hbarlab
