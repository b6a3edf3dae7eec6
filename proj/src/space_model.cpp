#include "esw/space_model.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace esw {

void StructureConstants::set(int i, int j, int k, Scalar value) {
    Triple t{i, j, k};
    std::sort(t.begin(), t.end());
    if (t[0] < 1 || t[2] > r_) {
        std::ostringstream os;
        os << "constants triple (" << i << "," << j << "," << k << "): index out of range [1," << r_ << "]";
        throw ValidationError(os.str());
    }
    if (value.signum() < 0) {
        std::ostringstream os;
        os << "constants triple (" << t[0] << "," << t[1] << "," << t[2] << "): negative value";
        throw ValidationError(os.str());
    }
    if (value.is_zero()) return;
    entries_[t] = std::move(value);
}

Scalar StructureConstants::value(int i, int j, int k) const {
    Triple t{i, j, k};
    std::sort(t.begin(), t.end());
    auto it = entries_.find(t);
    return it == entries_.end() ? Scalar(0) : it->second;
}

bool StructureConstants::contains_summand(int k) const {
    for (const auto& [t, v] : entries_)
        if (t[0] == k || t[1] == k || t[2] == k) return true;
    return false;
}

long long SpaceDescriptor::n() const {
    long long s = 0;
    for (long long d : dims) s += d;
    return s;
}

DiagonalMetric::DiagonalMetric(std::vector<Scalar> coeffs) : x(std::move(coeffs)) {
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].signum() <= 0) {
            std::ostringstream os;
            os << "metric coefficient x" << (i + 1) << " must be positive";
            throw ValidationError(os.str());
        }
    }
}

DiagonalMetric DiagonalMetric::ones(int r) {
    return DiagonalMetric(std::vector<Scalar>(static_cast<size_t>(r), Scalar(1)));
}

DiagonalMetric DiagonalMetric::from_doubles(const std::vector<double>& v) {
    std::vector<Scalar> c;
    c.reserve(v.size());
    for (double d : v) c.push_back(Scalar::approx(d));
    return DiagonalMetric(std::move(c));
}

bool DiagonalMetric::is_exact() const {
    for (const auto& xi : x)
        if (!xi.is_exact()) return false;
    return true;
}

std::vector<double> DiagonalMetric::to_doubles() const {
    std::vector<double> out;
    out.reserve(x.size());
    for (const auto& xi : x) out.push_back(xi.to_double());
    return out;
}

DiagonalMetric DiagonalMetric::scaled(const Scalar& c) const {
    std::vector<Scalar> out;
    out.reserve(x.size());
    for (const auto& xi : x) out.push_back(xi * c);
    return DiagonalMetric(std::move(out));
}

std::vector<std::string> validate_descriptor(const SpaceDescriptor& d) {
    if (d.r < 1) throw ValidationError("r must be a positive integer");
    if (static_cast<int>(d.dims.size()) != d.r)
        throw ValidationError("dims: expected " + std::to_string(d.r) + " entries, got " +
                              std::to_string(d.dims.size()));
    if (static_cast<int>(d.killing.size()) != d.r)
        throw ValidationError("killing: expected " + std::to_string(d.r) + " entries, got " +
                              std::to_string(d.killing.size()));
    for (int i = 0; i < d.r; ++i) {
        if (d.dims[i] < 1)
            throw ValidationError("dims[" + std::to_string(i) + "]: must be a positive integer");
        if (d.killing[i].signum() < 0)
            throw ValidationError("killing[" + std::to_string(i) + "]: must be nonnegative");
    }
    if (d.n() < 2) throw ValidationError("dims: total dimension must be at least 2");
    if (d.constants.r() != d.r)
        throw ValidationError("constants: index range r=" + std::to_string(d.constants.r()) +
                              " does not match descriptor r=" + std::to_string(d.r));
    if (d.trivial_dim < 0) throw ValidationError("trivial_dim: must be nonnegative");

    std::vector<std::string> warnings;
    for (int k = 1; k <= d.r; ++k) {
        if (d.killing[k - 1].is_zero() && d.constants.contains_summand(k)) {
            warnings.push_back("killing[" + std::to_string(k - 1) + "] = 0 but summand " +
                               std::to_string(k) +
                               " appears in a nonzero triple; only central summands may have b_k = 0");
        }
    }
    return warnings;
}

// ---------------------------------------------------------------------------
// Descriptor files
// ---------------------------------------------------------------------------

namespace {

Scalar scalar_from_json(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return Scalar(Rational::from_string(v.get<std::string>()));
        } catch (const std::exception&) {
            throw ParseError(where + ": cannot parse rational \"" + v.get<std::string>() + "\"");
        }
    }
    if (v.is_number()) return Scalar::approx(v.get<double>());
    throw ParseError(where + ": expected a \"p/q\" string or a number");
}

nlohmann::json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) return s.to_string();
    return s.to_double();
}

}  // namespace

SpaceDescriptor descriptor_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("descriptor: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("descriptor: top level must be an object");

    SpaceDescriptor d;
    try {
        d.name = j.value("name", std::string());
        if (!j.contains("r") || !j["r"].is_number_integer())
            throw ParseError("descriptor: missing integer key \"r\"");
        d.r = j["r"].get<int>();
        if (!j.contains("dims") || !j["dims"].is_array())
            throw ParseError("descriptor: missing array key \"dims\"");
        for (const auto& e : j["dims"]) {
            if (!e.is_number_integer()) throw ParseError("dims: entries must be integers");
            d.dims.push_back(e.get<long long>());
        }
        if (!j.contains("killing") || !j["killing"].is_array())
            throw ParseError("descriptor: missing array key \"killing\"");
        {
            int idx = 0;
            for (const auto& e : j["killing"]) {
                d.killing.push_back(scalar_from_json(e, "killing[" + std::to_string(idx) + "]"));
                ++idx;
            }
        }
        d.constants = StructureConstants(d.r);
        if (j.contains("constants")) {
            if (!j["constants"].is_array()) throw ParseError("constants: must be an array");
            std::set<StructureConstants::Triple> seen;
            int idx = 0;
            for (const auto& e : j["constants"]) {
                std::string where = "constants[" + std::to_string(idx) + "]";
                if (!e.is_object() || !e.contains("triple") || !e.contains("value"))
                    throw ParseError(where + ": expected {\"triple\":[i,j,k],\"value\":...}");
                const auto& t = e["triple"];
                if (!t.is_array() || t.size() != 3)
                    throw ParseError(where + ".triple: expected three indices");
                StructureConstants::Triple trip{};
                for (int q = 0; q < 3; ++q) {
                    if (!t[q].is_number_integer()) throw ParseError(where + ".triple: indices must be integers");
                    trip[q] = t[q].get<int>();
                }
                StructureConstants::Triple sorted = trip;
                std::sort(sorted.begin(), sorted.end());
                if (sorted != trip)
                    throw ParseError(where + ".triple: indices must satisfy i <= j <= k");
                if (!seen.insert(sorted).second) {
                    std::ostringstream os;
                    os << where << ": duplicate triple (" << trip[0] << "," << trip[1] << "," << trip[2] << ")";
                    throw ParseError(os.str());
                }
                d.constants.set(trip[0], trip[1], trip[2], scalar_from_json(e["value"], where + ".value"));
                ++idx;
            }
        }
        if (j.contains("trivial_dim")) {
            if (!j["trivial_dim"].is_number_integer())
                throw ParseError("trivial_dim: must be an integer");
            d.trivial_dim = j["trivial_dim"].get<long long>();
        }
        d.notes = j.value("notes", std::string());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("descriptor: ") + e.what());
    }
    validate_descriptor(d);
    return d;
}

std::string descriptor_to_json_text(const SpaceDescriptor& d) {
    nlohmann::json j;
    j["name"] = d.name;
    j["r"] = d.r;
    j["dims"] = d.dims;
    nlohmann::json kil = nlohmann::json::array();
    for (const auto& b : d.killing) kil.push_back(scalar_to_json(b));
    j["killing"] = kil;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& [t, v] : d.constants.entries()) {
        nlohmann::json e;
        e["triple"] = {t[0], t[1], t[2]};
        e["value"] = scalar_to_json(v);
        cs.push_back(e);
    }
    j["constants"] = cs;
    if (d.trivial_dim != 0) j["trivial_dim"] = d.trivial_dim;
    if (!d.notes.empty()) j["notes"] = d.notes;
    return j.dump(2) + "\n";
}

SpaceDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open descriptor file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return descriptor_from_json_text(buf.str());
}

void save_descriptor(const SpaceDescriptor& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write descriptor file: " + path);
    out << descriptor_to_json_text(d);
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

/// Assembles an r=3 descriptor from (a_1, a_2, a_3) and [123]; checks that
/// every d_i = [123]/a_i is a positive integer.
SpaceDescriptor from_triple_data(std::string name, const Rational& a1, const Rational& a2,
                                 const Rational& a3, const Rational& c123, std::string notes) {
    SpaceDescriptor d;
    d.name = std::move(name);
    d.r = 3;
    const Rational as[3] = {a1, a2, a3};
    for (int i = 0; i < 3; ++i) {
        Rational di = c123 / as[i];
        if (!di.is_integer() || di.signum() <= 0)
            throw ValidationError(d.name + ": dimension [123]/a_" + std::to_string(i + 1) +
                                  " = " + di.to_string() + " is not a positive integer");
        d.dims.push_back(di.num().to_longlong());
    }
    d.killing.assign(3, Scalar(1));
    d.constants = StructureConstants(3);
    d.constants.set(1, 2, 3, Scalar(c123));
    d.notes = std::move(notes);
    validate_descriptor(d);
    return d;
}

std::string triple_name(const char* fam, const std::vector<long long>& p) {
    std::ostringstream os;
    os << fam << "(" << p[0] << "," << p[1] << "," << p[2] << ")";
    return os.str();
}

}  // namespace

SpaceDescriptor wallach_descriptor(WallachFamily family, const std::vector<long long>& params) {
    auto need = [&](size_t n, const char* fam) {
        if (params.size() != n)
            throw std::invalid_argument(std::string(fam) + ": expected " + std::to_string(n) +
                                        " parameter(s)");
        for (long long p : params)
            if (p < 1) throw std::invalid_argument(std::string(fam) + ": parameters must be >= 1");
    };
    switch (family) {
        case WallachFamily::W1: {
            need(3, "W1");
            long long k = params[0], l = params[1], m = params[2];
            int twos = (k == 2) + (l == 2) + (m == 2);
            if (twos >= 2) throw std::invalid_argument("W1: triples with two parameters equal to 2 are excluded");
            Rational s(2 * (k + l + m - 2));
            return from_triple_data(triple_name("W1", params), Rational(k) / s, Rational(l) / s,
                                    Rational(m) / s, Rational(k * l * m) / s,
                                    "SO(k+l+m)/SO(k)xSO(l)xSO(m)");
        }
        case WallachFamily::W2: {
            need(3, "W2");
            long long k = params[0], l = params[1], m = params[2];
            Rational s(2 * (k + l + m));
            return from_triple_data(triple_name("W2", params), Rational(k) / s, Rational(l) / s,
                                    Rational(m) / s, Rational(k * l * m) / Rational(k + l + m),
                                    "SU(k+l+m)/S(U(k)xU(l)xU(m))");
        }
        case WallachFamily::W3: {
            need(3, "W3");
            long long k = params[0], l = params[1], m = params[2];
            Rational s(2 * (k + l + m + 1));
            return from_triple_data(triple_name("W3", params), Rational(k) / s, Rational(l) / s,
                                    Rational(m) / s, Rational(2 * k * l * m) / Rational(k + l + m + 1),
                                    "Sp(k+l+m)/Sp(k)xSp(l)xSp(m)");
        }
        case WallachFamily::W4: {
            need(1, "W4");
            long long l = params[0];
            if (l < 2) throw std::invalid_argument("W4: requires l >= 2");
            return from_triple_data("W4(l=" + std::to_string(l) + ")", Rational(1, 4),
                                    Rational(l - 1, 4 * l), Rational(l + 1, 4 * l),
                                    Rational(l * l - 1, 4), "SU(2l)/U(l)");
        }
        case WallachFamily::W5: {
            need(1, "W5");
            long long l = params[0];
            if (l < 4) throw std::invalid_argument("W5: requires l >= 4");
            Rational b(l - 2, 4 * (l - 1));
            return from_triple_data("W5(l=" + std::to_string(l) + ")", b, b,
                                    Rational(1, 2 * (l - 1)), Rational(l - 2, 2),
                                    "SO(2l)/U(1)xU(l-1)");
        }
    }
    throw std::invalid_argument("unknown Wallach family");
}

SpaceDescriptor exceptional_wallach_descriptor(int index) {
    struct Row {
        int idx;
        Rational a1, a2, a3, c;
        const char* coset;
    };
    static const std::vector<Row> rows = {
        {6, Rational(1, 4), Rational(1, 4), Rational(1, 6), Rational(4), "E6/SU(4)x2Sp(1)xR"},
        {7, Rational(1, 6), Rational(1, 6), Rational(1, 6), Rational(8, 3), "E6/SO(8)xR^2"},
        {8, Rational(1, 4), Rational(1, 8), Rational(7, 24), Rational(7, 2), "E6/Sp(3)xSp(1)"},
        {9, Rational(2, 9), Rational(2, 9), Rational(2, 9), Rational(64, 9), "E7/SO(8)x3Sp(1)"},
        {10, Rational(2, 9), Rational(1, 6), Rational(5, 18), Rational(20, 3), "E7/SU(6)xSp(1)xR"},
        {11, Rational(5, 18), Rational(5, 18), Rational(5, 18), Rational(175, 18), "E7/SO(8)"},
        {12, Rational(1, 5), Rational(1, 5), Rational(4, 15), Rational(64, 5), "E8/SO(12)x2Sp(1)"},
        {13, Rational(4, 15), Rational(4, 15), Rational(4, 15), Rational(256, 15), "E8/SO(8)xSO(8)"},
        {14, Rational(5, 18), Rational(5, 18), Rational(1, 9), Rational(20, 9), "F4/SO(5)x2Sp(1)"},
        {15, Rational(1, 9), Rational(1, 9), Rational(1, 9), Rational(8, 9), "F4/SO(8)"},
    };
    for (const auto& row : rows) {
        if (row.idx == index)
            return from_triple_data("W" + std::to_string(index), row.a1, row.a2, row.a3, row.c,
                                    row.coset);
    }
    throw std::invalid_argument("exceptional Wallach index must be in 6..15");
}

SpaceDescriptor flag_r2_descriptor(long long d1, long long d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("flag_r2: dimensions must be >= 1");
    SpaceDescriptor d;
    d.name = "flag_r2(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
    d.r = 2;
    d.dims = {d1, d2};
    d.killing.assign(2, Scalar(1));
    d.constants = StructureConstants(2);
    d.constants.set(1, 1, 2, Scalar(Rational(d1 * d2, d1 + 4 * d2)));
    d.notes = "flag manifold with two isotropy summands";
    validate_descriptor(d);
    return d;
}

int full_flag_pair_index(int n, int a, int b) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n || a == b) throw std::invalid_argument("full_flag_pair_index: bad pair");
    // pairs listed lexicographically: (1,2),(1,3),...,(1,n),(2,3),...
    int before = (a - 1) * n - (a - 1) * a / 2;
    return before + (b - a);
}

SpaceDescriptor full_flag_sun_descriptor(int n) {
    if (n < 3) throw std::invalid_argument("full_flag_sun: requires n >= 3");
    SpaceDescriptor d;
    d.name = "full_flag_sun(" + std::to_string(n) + ")";
    d.r = n * (n - 1) / 2;
    d.dims.assign(static_cast<size_t>(d.r), 2);
    d.killing.assign(static_cast<size_t>(d.r), Scalar(1));
    d.constants = StructureConstants(d.r);
    Scalar v(Rational(1, n));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                d.constants.set(full_flag_pair_index(n, a, b), full_flag_pair_index(n, a, c),
                                full_flag_pair_index(n, b, c), v);
            }
    d.notes = "full flag SU(n)/T";
    validate_descriptor(d);
    return d;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"W1", "k,l,m", "SO(k+l+m)/SO(k)xSO(l)xSO(m); (k,2,2) and permutations excluded"},
        {"W2", "k,l,m", "SU(k+l+m)/S(U(k)xU(l)xU(m))"},
        {"W3", "k,l,m", "Sp(k+l+m)/Sp(k)xSp(l)xSp(m)"},
        {"W4", "l>=2", "SU(2l)/U(l)"},
        {"W5", "l>=4", "SO(2l)/U(1)xU(l-1)"},
        {"W6", "", "E6/SU(4)x2Sp(1)xR"},
        {"W7", "", "E6/SO(8)xR^2"},
        {"W8", "", "E6/Sp(3)xSp(1)"},
        {"W9", "", "E7/SO(8)x3Sp(1)"},
        {"W10", "", "E7/SU(6)xSp(1)xR"},
        {"W11", "", "E7/SO(8)"},
        {"W12", "", "E8/SO(12)x2Sp(1)"},
        {"W13", "", "E8/SO(8)xSO(8)"},
        {"W14", "", "F4/SO(5)x2Sp(1)"},
        {"W15", "", "F4/SO(8)"},
        {"flag_r2", "d1,d2", "flag manifold with two isotropy summands"},
        {"full_flag_sun", "n>=3", "full flag SU(n)/T"},
    };
    return entries;
}

}  // namespace esw
