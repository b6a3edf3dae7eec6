#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "esw/scalar.hpp"

namespace esw {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Symmetric triple products of a reductive decomposition. A value is stored
/// once per unordered triple i <= j <= k (1-based); consumers expand to
/// ordered sums themselves. Absent triples are zero, stored values are >= 0.
class StructureConstants {
public:
    using Triple = std::array<int, 3>;

    StructureConstants() : r_(0) {}
    explicit StructureConstants(int r) : r_(r) {}

    int r() const { return r_; }
    bool empty() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }

    /// Indices may come in any order; they are sorted before storage.
    void set(int i, int j, int k, Scalar value);
    /// Zero Scalar for absent triples.
    Scalar value(int i, int j, int k) const;
    bool contains_summand(int k) const;

    const std::map<Triple, Scalar>& entries() const { return entries_; }

    /// Calls fn(i, j, k, value) for every distinct ordered permutation of
    /// every stored triple (1, 3, or 6 calls per triple).
    template <typename Fn>
    void for_each_ordered(Fn&& fn) const {
        for (const auto& [t, v] : entries_) {
            int i = t[0], j = t[1], k = t[2];
            if (i == j && j == k) {
                fn(i, i, i, v);
            } else if (i == j) {  // i == j < k
                fn(i, i, k, v);
                fn(i, k, i, v);
                fn(k, i, i, v);
            } else if (j == k) {  // i < j == k
                fn(i, j, j, v);
                fn(j, i, j, v);
                fn(j, j, i, v);
            } else {
                fn(i, j, k, v);
                fn(i, k, j, v);
                fn(j, i, k, v);
                fn(j, k, i, v);
                fn(k, i, j, v);
                fn(k, j, i, v);
            }
        }
    }

private:
    int r_;
    std::map<Triple, Scalar> entries_;
};

/// A compact homogeneous space reduced to the data the curvature formulas
/// consume: summand dimensions d_k, Killing coefficients b_k, structural
/// constants, and the dimension of the space of trivial metric variations.
struct SpaceDescriptor {
    std::string name;
    int r = 0;
    std::vector<long long> dims;
    std::vector<Scalar> killing;
    StructureConstants constants;
    long long trivial_dim = 0;
    std::string notes;

    long long n() const;  // sum of dims
};

/// Diagonal metric coefficients (x_1, ..., x_r), all positive.
struct DiagonalMetric {
    std::vector<Scalar> x;

    DiagonalMetric() = default;
    explicit DiagonalMetric(std::vector<Scalar> coeffs);
    static DiagonalMetric ones(int r);
    static DiagonalMetric from_doubles(const std::vector<double>& v);

    int r() const { return static_cast<int>(x.size()); }
    bool is_exact() const;
    std::vector<double> to_doubles() const;
    DiagonalMetric scaled(const Scalar& c) const;
};

/// Hard errors throw ValidationError; soft issues come back as warnings.
std::vector<std::string> validate_descriptor(const SpaceDescriptor& d);

SpaceDescriptor load_descriptor(const std::string& path);
void save_descriptor(const SpaceDescriptor& d, const std::string& path);
SpaceDescriptor descriptor_from_json_text(const std::string& text);
std::string descriptor_to_json_text(const SpaceDescriptor& d);

// ---------------------------------------------------------------------------
// Catalog: three-summand spaces with a single nonzero constant [123], plus
// the two-summand partial-flag family and the full flag of SU(n).
// ---------------------------------------------------------------------------

enum class WallachFamily { W1, W2, W3, W4, W5 };

/// Parametric families. W1/W2/W3 take (k,l,m); W4/W5 take a single l.
/// The summand data is (a_1, a_2, a_3) with a_i = [123]/d_i:
///   W1: a_i = (k,l,m)/(2(k+l+m-2)),  dims (lm, km, kl)
///   W2: a_i = (k,l,m)/(2(k+l+m)),    dims (2lm, 2km, 2kl)
///   W3: a_i = (k,l,m)/(2(k+l+m+1)),  dims (4lm, 4km, 4kl)
///   W4: a = (1/4, (l-1)/4l, (l+1)/4l), dims (l^2-1, l(l+1), l(l-1)), l >= 2
///   W5: a = ((l-2)/4(l-1), (l-2)/4(l-1), 1/2(l-1)), dims (2(l-1), 2(l-1), (l-1)(l-2)), l >= 4
SpaceDescriptor wallach_descriptor(WallachFamily family, const std::vector<long long>& params);

/// Isolated three-summand spaces, indexed 6..15.
SpaceDescriptor exceptional_wallach_descriptor(int index);

/// Two-summand flag space: only [112] = d1*d2/(d1+4*d2) is nonzero.
SpaceDescriptor flag_r2_descriptor(long long d1, long long d2);

/// Full flag of SU(n): r = n(n-1)/2 two-dimensional summands indexed by
/// pairs {a,b} in {1..n}; [efg] = 1/n exactly when the three pairs form a
/// triangle, zero otherwise.
SpaceDescriptor full_flag_sun_descriptor(int n);

/// 1-based summand index of the pair {a,b}, a < b, in the full-flag layout.
int full_flag_pair_index(int n, int a, int b);

struct CatalogEntry {
    std::string name;
    std::string params;  // "" when the entry takes no parameters
    std::string summary;
};
const std::vector<CatalogEntry>& catalog_entries();

}  // namespace esw
