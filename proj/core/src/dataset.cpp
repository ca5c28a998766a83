#include "egr/dataset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace egr {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Surface table
// ---------------------------------------------------------------------------

std::vector<SurfacePair> surface_pairs() {
    static const std::vector<SurfacePair> t = {
        {53, 8, 1},    {61, 12, 1},  {73, 5, 1},    {193, 17, 1},  {233, 17, 1},
        {277, 29, 1},  {349, 21, 1}, {353, 5, 2},   {373, 93, 1},  {389, 8, 1},
        {397, 24, 1},  {409, 13, 1}, {421, 5, 1},   {421, 5, 2},   {433, 12, 1},
        {461, 29, 1},  {613, 21, 1}, {677, 13, 1},  {677, 29, 1},  {677, 85, 1},
        {709, 5, 1},   {797, 8, 1},  {797, 29, 1},  {809, 5, 1},   {821, 44, 1},
        {853, 21, 1},  {929, 13, 1}, {997, 13, 1},  {1013, 21, 1}, {1013, 53, 1},
        {1109, 5, 1},  {1109, 5, 1}, {1109, 53, 1}, {1109, 77, 1}, {1277, 5, 1},
        {1277, 29, 1}, {1321, 5, 2}, {1493, 5, 1},  {1493, 65, 1}, {1597, 5, 2},
        {1997, 8, 2}};
    return t;
}

std::vector<long> surface_discriminants() {
    std::set<long> s;
    for (const auto& p : surface_pairs()) s.insert(p.D);
    return std::vector<long>(s.begin(), s.end());
}

std::vector<long> exceptional_discriminants() {
    std::set<long> s;
    for (const auto& p : surface_pairs())
        if (p.power == 2) s.insert(p.D);
    return std::vector<long>(s.begin(), s.end());
}

// ---------------------------------------------------------------------------
// Frobenius tables
// ---------------------------------------------------------------------------

std::vector<FrobeniusTable> frobenius_tables() {
    std::vector<FrobeniusTable> out;
    // codes for GF(4): 0, 1, 2 = a, 3 = a^2; -1 is a dash
    FrobeniusTable t353{353, false, {
        {2, -9, -1, -1, 2, 1, -1, 0, 2},
        {2, -10, 1, 1, -1, 2, -1, 3, 4},
        {9, 3, 0, -2, -2, 0, 1, 2, 3},
        {11, 99, -10, 3, 2, 1, 3, 4, 3},
        {11, 89, 10, 2, -2, 0, 1, 1, 3},
        {17, 653, -66, 2, -4, 0, 1, 0, 2},
        {17, -587, -66, 3, 0, 1, 3, 3, 4},
        {19, 277, -28, 2, 0, 0, 1, 2, 3},
        {19, -249, -28, -3, 2, 1, 3, 3, 3}}};
    FrobeniusTable t421{421, false, {
        {3, -43, 4, 1, -2, 1, 3, 0, 2},
        {3, -39, -4, 0, 2, 0, 1, 1, 4},
        {4, 2, 0, -2, 1, 3, -1, 1, 1},
        {5, -11, 1, -2, 1, 3, 5, 1, -1},
        {5, -10, -1, 3, 0, 1, 3, 3, -1},
        {7, -527, -54, 3, 0, 1, 3, 3, 4},
        {7, -581, 54, -2, 1, 3, 5, 1, 6},
        {11, 244, 25, 0, 0, 0, 1, 0, 2},
        {11, 269, -25, 5, -1, 2, 5, 2, 1}}};
    FrobeniusTable t1597{1597, false, {
        {3, -39, -2, 0, 2, 0, 1, 1, 4},
        {3, 41, -2, 2, -1, 3, 5, 4, 4},
        {4, 2, 0, -2, 1, 3, -1, 1, 1},
        {7, -553, 27, 0, 3, 3, 5, 4, 6},
        {7, 526, 27, -3, 2, 1, 3, 3, 4},
        {17, 15832, -773, 6, 0, 0, 1, 1, 6},
        {17, 15059, 773, -1, 5, 2, 5, 4, 6},
        {19, -19, -1, 5, -2, 1, 3, 4, 1},
        {19, 20, -1, -2, 3, 3, 5, 2, 3}}};
    FrobeniusTable t1997{1997, true, {
        {4, 2, 0, -1, -1, 1, -1, -1, -1},
        {7, 22, 1, 2, -1, 0, 1, -1, -1},
        {7, 23, -1, -3, 0, 1, 3, -1, -1},
        {9, 3, 0, 0, -1, 0, 1, -1, -1},
        {17, 137, -6, -2, -3, 0, 1, -1, -1},
        {17, -131, -6, 6, 0, 0, 1, -1, -1},
        {25, 5, 0, -5, 2, 1, 3, -1, -1},
        {29, 153, 7, 2, -3, 0, 1, -1, -1},
        {29, 160, -7, 2, -3, 0, 1, -1, -1}}};
    out.push_back(std::move(t353));
    out.push_back(std::move(t421));
    out.push_back(std::move(t1597));
    out.push_back(std::move(t1997));
    return out;
}

// ---------------------------------------------------------------------------
// Scan polynomials
// ---------------------------------------------------------------------------

std::vector<ScanPoly> scan_polynomials() {
    auto even12 = [](long c0, long c2, long c4, long c6, long c8, long c10) {
        return std::vector<Z>{c0, 0, c2, 0, c4, 0, c6, 0, c8, 0, c10, 0, 1};
    };
    std::vector<ScanPoly> out;
    out.push_back({"sextic1997",
                   {-1372, -1372, -343, -50, -25, 0, 1},
                   6,
                   "S3wr2"});
    out.push_back({"dodecic1997a", even12(-289, -3505, -393, -1662, -383, 7), 12, "S3sq.2"});
    out.push_back({"dodecic1997b",
                   {196, 868, 1922, -3554, 2573, -664, 4050, -3932, 1923, -90, 0, 0, 1},
                   12,
                   "S3sq.2"});
    struct EvenPair {
        const char* name;
        long c0, c2, c4, c6, c8, c10;
    };
    const EvenPair pairs[] = {
        {"p1", 16, -1104, 10988, -1656, -151, 17},
        {"p2", 1, 219, -442, 371, -118, -49},
        {"p3", 16, -416, 2956, -3284, 597, -63},
        {"p4", 16, -1040, 9144, -7548, 1101, -58},
        {"p5", 1, -501, 2390, -1293, 602, -49},
        {"p6", -289, -7791, -7948, -3079, -904, -123},
        {"p7", -49, -594, -110, 352, 130, 2}};
    for (const EvenPair& p : pairs) {
        out.push_back({std::string(p.name) + "+",
                       even12(p.c0, p.c2, p.c4, p.c6, p.c8, p.c10), 12, "S4sq.2"});
        // partner: odd-index coefficients keep sign, x^2, x^6, x^10 flip
        out.push_back({std::string(p.name) + "-",
                       even12(p.c0, -p.c2, p.c4, -p.c6, p.c8, -p.c10), 12, "S4sq.2"});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fields
// ---------------------------------------------------------------------------

NFPtr field_Q() {
    static NFPtr K = NumberField::create(QPoly({Q(0), Q(1)}), "Q");
    return K;
}

NFPtr field_gauss() {
    static NFPtr K = NumberField::create(QPoly({Q(1), Q(0), Q(1)}), "Q(i)");
    return K;
}

NFPtr field_sqrt(long n) {
    return NumberField::create(QPoly({Q(-n), Q(0), Q(1)}),
                               "Q(sqrt" + std::to_string(n) + ")");
}

NFPtr field_real_quadratic(long D) {
    if (D % 4 != 1 || D <= 1)
        throw std::domain_error("field_real_quadratic: need D = 1 mod 4, D > 1");
    return NumberField::create(QPoly({Q(-(D - 1) / 4), Q(-1), Q(1)}),
                               "F" + std::to_string(D));
}

static NFElement el(NFPtr F, const Z& a, const Z& b) {
    return NFElement(F, {Q(a), Q(b)});
}

static NFElement el(NFPtr F, long a, long b) { return el(F, Z(a), Z(b)); }

RelativeExtension twotorsion_field_353() {
    NFPtr F = field_real_quadratic(353);
    return build_relative(F, g353(F), "K353");
}

std::vector<QVec> sextic353_unit_coords() {
    auto row = [](std::initializer_list<long> v) {
        QVec r;
        for (long x : v) r.push_back(Q(x));
        return r;
    };
    return {row({27, -12, -32, -8, -12, -18}), row({49, -33, -46, -14, -23, -32}),
            row({25, -14, -37, -7, -11, -17}), row({-133, 103, 91, 39, 64, 85})};
}

// ---------------------------------------------------------------------------
// Curve models
// ---------------------------------------------------------------------------

std::vector<long> curve_model_discs() { return {353, 421, 1597}; }

GenusTwoModel curve_model(long D) {
    if (D == 353) {
        NFPtr F = field_real_quadratic(353);
        GenusTwoModel m;
        m.F = F;
        m.P = {el(F, -627353458L, -70532813L), el(F, -288869715L, -32480001L),
               el(F, -55387985L, -6227174L),   el(F, -5659370L, -636332L),
               el(F, -325090L, -36545L),       el(F, -9948L, -1119L),
               el(F, -149L, -15L)};
        m.Q = {el(F, 1, 1), el(F, 0, 1), el(F, 1, 0), el(F, 1, 1)};
        return m;
    }
    if (D == 421) {
        NFPtr F = field_real_quadratic(421);
        GenusTwoModel m;
        m.F = F;
        m.P = {el(F, 58050373L, 6111237L), el(F, 40412781L, 3985370L),
               el(F, 10787410L, 1167345L), el(F, 1727293L, 163829L),
               el(F, 131460L, 15049L),     el(F, 6772L, 593L),
               el(F, 77L, 13L)};
        m.Q = {el(F, 1, 1), el(F, 1, 1), el(F, 1, 0), el(F, 0, 1)};
        return m;
    }
    if (D == 1597) {
        NFPtr F = field_real_quadratic(1597);
        GenusTwoModel m;
        m.F = F;
        m.P = {el(F, Z("10048626384323"), Z("515810377784")),
               el(F, Z("-10471376373574"), Z("-537510739916")),
               el(F, Z("4546578743807"), Z("233382395752")),
               el(F, Z("-1052833060832"), Z("-54043428224")),
               el(F, Z("137136152764"), Z("7039395048")),
               el(F, Z("-9526607332"), Z("-489014393")),
               el(F, Z("275745514"), Z("14154412"))};
        m.Q = {el(F, 1, 1), el(F, 1, 1), el(F, 0, 1), el(F, 1, 0)};
        return m;
    }
    throw std::domain_error("curve_model: no model for this discriminant");
}

NFElement curve_disc_expected(long D) {
    NFPtr F = field_real_quadratic(D);
    if (D == 353)
        return el(F, Z("195351936235458727553"), Z("21964099955952722688"));
    if (D == 421) return el(F, Z("129732855361981"), Z("13293438440160"));
    if (D == 1597)
        return el(F, Z("506706541666672323973956880731729778422190517149"),
                  Z("26009972177581544500619009287817343041672458200"));
    throw std::domain_error("curve_disc_expected: no value for this discriminant");
}

// ---------------------------------------------------------------------------
// 353 sextic data
// ---------------------------------------------------------------------------

NFElement alpha_353(const RelativeExtension& ext) {
    return NFElement(ext.K, {Q(83, 17), Q(235, 17), Q(-419, 17), Q(-10, 17),
                             Q(35, 17), Q(-22, 17)});
}

NFElement alpha_prime_353(const RelativeExtension& ext) {
    return NFElement(ext.K, {Q(74, 17), Q(264, 17), Q(-698, 17), Q(-4, 17),
                             Q(48, 17), Q(-36, 17)});
}

std::vector<NFElement> hprime_353(NFPtr F) {
    return {el(F, 512, 64),  el(F, 992, 96), el(F, 196, 44), el(F, -60, -20),
            el(F, -63, -1),  el(F, 8, 0),    el(F, 1, 0)};
}

std::vector<NFElement> g353(NFPtr F) {
    return {el(F, 10, -1), el(F, 0, 0), el(F, -1, 0), el(F, 1, 0)};
}

std::vector<NFElement> g421(NFPtr F) {
    return {el(F, 2, 1),  el(F, 10, 2), el(F, -13, 3), el(F, 14, -2),
            el(F, -9, 0), el(F, 0, 0),  el(F, 1, 0)};
}

std::vector<Z> h421_rational() {
    return {-99, -366, -989, -1030, 268, 766, -40, -212, 58, 26, -18, 0, 1};
}

// ---------------------------------------------------------------------------
// Humbert and scaling data
// ---------------------------------------------------------------------------

std::pair<NFElement, NFElement> humbert_point(long D) {
    NFPtr F = field_real_quadratic(D);
    if (D == 353)
        return {el(F, -209, -12) * Q(1, 726), el(F, 6611, 742) * Q(1, 161051)};
    if (D == 421)
        return {el(F, 147, -16) * Q(1, 54), el(F, 129846, -12229) * Q(1, 243)};
    if (D == 1597)
        return {el(F, 259, 16) * Q(1, 294), el(F, 56749, 2913) * Q(1, 16807)};
    throw std::domain_error("humbert_point: no point for this discriminant");
}

ScalingData scaling_data_1597() {
    NFPtr F = field_real_quadratic(1597);
    ScalingData s;
    s.m = 1;
    s.n = 2;
    s.gp = el(F, -2335, 114);
    s.hp = NFElement::one(F);
    s.u = el(F, 526, 27);  // sign flipped from the displayed -27w - 526
    s.eps = el(F, Z("-49063993"), Z("-2518525"));
    return s;
}

std::vector<EllipticModel> elliptic_models_1997() {
    NFPtr F = field_real_quadratic(1997);
    std::vector<EllipticModel> out;
    out.push_back({F, el(F, 0, 1), el(F, 1, 1), el(F, 0, 0), el(F, 5401, 111),
                   el(F, 81112, 2406)});
    out.push_back({F, el(F, 1, 1), el(F, 0, -1), el(F, 1, 1), el(F, 434383, 19636),
                   el(F, Z("125261893"), Z("5730650"))});
    out.push_back({F, el(F, 0, 1), el(F, -1, 0), el(F, 1, 1), el(F, -208733, 9370),
                   el(F, Z("-61535794"), Z("2697263"))});
    return out;
}

std::vector<PointCountCheck> point_count_checks() {
    return {{353, 2, -10, 1, 1, -1, 5}, {421, 5, -10, -1, 3, 0, 9}};
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

static Q q_from_json(const json& v) {
    if (v.is_number_integer()) return Q((long)v.get<long long>());
    if (v.is_string()) {
        Q q;
        if (q.set_str(v.get<std::string>(), 10) != 0)
            throw std::runtime_error("bad rational: " + v.get<std::string>());
        q.canonicalize();
        return q;
    }
    throw std::runtime_error("expected integer or string rational");
}

NFPtr field_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("poly") || !j["poly"].is_array())
        throw std::runtime_error("field json: missing poly array");
    std::vector<Q> c;
    for (const auto& v : j["poly"]) c.push_back(q_from_json(v));
    QPoly f(c);
    std::string label = j.value("label", std::string("K"));
    if (j.contains("integral_basis")) {
        QMat ib;
        for (const auto& row : j["integral_basis"]) {
            QVec r;
            for (const auto& v : row) r.push_back(q_from_json(v));
            ib.push_back(r);
        }
        return NumberField::create_with_basis(f, label, ib);
    }
    return NumberField::create(f, label);
}

std::string field_to_json(NFPtr K) {
    json j;
    j["label"] = K->label;
    json poly = json::array();
    for (int i = 0; i <= K->f.deg(); i++) poly.push_back(K->f.coeff(i).get_str());
    j["poly"] = poly;
    json ib = json::array();
    for (const auto& row : K->ib) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        ib.push_back(r);
    }
    j["integral_basis"] = ib;
    j["disc"] = K->field_disc.get_str();
    j["signature"] = {K->r1, K->r2};
    return j.dump(2);
}

UnitGroup units_from_json(NFPtr K, const std::string& text) {
    json j = json::parse(text);
    std::string lbl = j.value("field_label", std::string());
    if (!lbl.empty() && lbl != K->label)
        throw std::runtime_error("units json: field_label '" + lbl +
                                 "' does not match field '" + K->label + "'");
    std::vector<QVec> coords;
    for (const auto& row : j.at("units")) {
        QVec r;
        for (const auto& v : row) r.push_back(q_from_json(v));
        if ((int)r.size() != K->n) throw std::runtime_error("units json: bad coordinate length");
        coords.push_back(r);
    }
    bool certified = j.value("certified", false);
    return unit_group_supplied(K, coords, certified);
}

std::string units_to_json(const UnitGroup& U) {
    json j;
    j["field_label"] = U.K->label;
    json units = json::array();
    for (const NFElement& u : U.gens) {
        json r = json::array();
        for (const Q& v : u.integral_coords()) r.push_back(v.get_str());
        units.push_back(r);
    }
    j["units"] = units;
    j["certified"] = U.cert == UnitCertification::CertifiedFundamental ||
                     U.cert == UnitCertification::Supplied;
    return j.dump(2);
}

std::string elements_to_json(const std::vector<NFElement>& v) {
    json arr = json::array();
    for (const NFElement& x : v) {
        json r = json::array();
        for (const Q& c : x.a) r.push_back(c.get_str());
        arr.push_back(r);
    }
    return arr.dump(2);
}

}  // namespace egr
