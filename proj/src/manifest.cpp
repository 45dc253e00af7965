#include "manifest.hpp"

#include <fstream>
#include <sstream>

namespace l3kit {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw manifest_error(where + ": " + what);
}

Scalar parse_scalar(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "scalar must be a string");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const parse_error& e) {
        fail(where, e.what());
    }
}

int parse_count(const json& j, const std::string& where, int lo = 0) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    const int v = j.get<int>();
    if (v < lo) fail(where, "value out of range");
    return v;
}

const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

// Sparse {i,j,k[,l],c} records into a tensor with the given shape.
DenseTensor parse_sparse(const json& j, std::vector<int> shape, const std::string& where) {
    DenseTensor t(shape);
    if (!j.is_array()) fail(where, "expected an array of coefficient records");
    const char* keys4[] = {"i", "j", "k", "l"};
    for (std::size_t n = 0; n < j.size(); ++n) {
        const std::string at = where + "[" + std::to_string(n) + "]";
        const json& rec = j[n];
        if (!rec.is_object()) fail(at, "expected an object");
        Index idx(shape.size());
        for (std::size_t a = 0; a < shape.size(); ++a) {
            idx[a] = parse_count(field(rec, keys4[a], at), at + "." + keys4[a]);
            if (idx[a] >= shape[a]) fail(at + "." + keys4[a], "index out of range");
        }
        t.at(idx) = parse_scalar(field(rec, "c", at), at + ".c");
    }
    return t;
}

ordered_json dump_sparse(const DenseTensor& t) {
    ordered_json arr = ordered_json::array();
    const char* keys4[] = {"i", "j", "k", "l"};
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (t.flat(f).is_zero()) continue;
        Index idx = t.multi_index(f);
        ordered_json rec;
        for (std::size_t a = 0; a < idx.size(); ++a) rec[keys4[a]] = idx[a];
        rec["c"] = t.flat(f).str();
        arr.push_back(std::move(rec));
    }
    return arr;
}

Matrix parse_matrix(const json& j, int rows, int cols, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) fail(where, "matrix row count mismatch");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) fail(where, "matrix column count mismatch");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = parse_scalar(row[c], where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
    return m;
}

ordered_json dump_matrix(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Cochain parse_cochain_body(const json& j, const Representation& rep, const std::string& where) {
    const int degree = parse_count(field(j, "degree", where), where + ".degree", 1);
    const std::string dir = field(j, "direction", where).get<std::string>();
    Direction d;
    if (dir == "g_to_V")
        d = Direction::g_to_V;
    else if (dir == "V_to_g")
        d = Direction::V_to_g;
    else
        fail(where + ".direction", "must be 'g_to_V' or 'V_to_g'");
    const int src = d == Direction::g_to_V ? rep.algebra.dim : rep.dimV;
    const int dst = d == Direction::g_to_V ? rep.dimV : rep.algebra.dim;
    Cochain c = zero_cochain(degree, d, src, dst);
    const json& coeffs = field(j, "coeffs", where);
    if (!coeffs.is_array()) fail(where + ".coeffs", "expected an array");
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const std::string at = where + ".coeffs[" + std::to_string(n) + "]";
        const json& rec = coeffs[n];
        const json& idxj = field(rec, "idx", at);
        if (!idxj.is_array() || static_cast<int>(idxj.size()) != 2 * degree - 1)
            fail(at + ".idx", "index tuple must have 2*degree-1 entries");
        Index idx(static_cast<std::size_t>(2 * degree - 1) + 1);
        for (int a = 0; a < 2 * degree - 1; ++a) {
            idx[a] = parse_count(idxj[a], at + ".idx", 0);
            if (idx[a] >= src) fail(at + ".idx", "index out of range");
        }
        idx.back() = parse_count(field(rec, "out", at), at + ".out");
        if (idx.back() >= dst) fail(at + ".out", "output index out of range");
        c.coeffs.at(idx) = parse_scalar(field(rec, "c", at), at + ".c");
    }
    return c;
}

ordered_json dump_cochain_coeffs(const Cochain& c) {
    ordered_json arr = ordered_json::array();
    for (std::size_t f = 0; f < c.coeffs.size(); ++f) {
        if (c.coeffs.flat(f).is_zero()) continue;
        Index idx = c.coeffs.multi_index(f);
        ordered_json rec;
        ordered_json ix = ordered_json::array();
        for (std::size_t a = 0; a + 1 < idx.size(); ++a) ix.push_back(idx[a]);
        rec["idx"] = std::move(ix);
        rec["out"] = idx.back();
        rec["c"] = c.coeffs.flat(f).str();
        arr.push_back(std::move(rec));
    }
    return arr;
}

LinearOperator parse_operator_body(const json& j, const std::string& where) {
    const int src = parse_count(field(j, "src", where), where + ".src", 1);
    const int dst = parse_count(field(j, "dst", where), where + ".dst", 1);
    return LinearOperator{src, dst, parse_matrix(field(j, "matrix", where), dst, src, where + ".matrix")};
}

} // namespace

Manifest parse_manifest(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw manifest_error(std::string("manifest: ") + e.what());
    }
    if (!doc.is_object()) fail("manifest", "top level must be an object");
    const json& ver = field(doc, "schema_version", "manifest");
    if (!ver.is_string() || ver.get<std::string>() != "1")
        fail("manifest.schema_version", "unsupported version");
    const json& objs = field(doc, "objects", "manifest");
    if (!objs.is_object()) fail("manifest.objects", "must be an object");

    Manifest m;
    // pass 1: self-contained objects
    for (auto it = objs.begin(); it != objs.end(); ++it) {
        const std::string where = "objects." + it.key();
        const json& j = it.value();
        if (!j.is_object()) fail(where, "expected an object");
        const std::string type = field(j, "type", where).get<std::string>();
        ManifestObject o;
        o.type = type;
        if (type == "algebra") {
            const int d = parse_count(field(j, "dim", where), where + ".dim", 1);
            o.algebra = ThreeLeibnizAlgebra{d, parse_sparse(field(j, "bracket", where), {d, d, d, d}, where + ".bracket")};
        } else if (type == "leibniz") {
            const int d = parse_count(field(j, "dim", where), where + ".dim", 1);
            o.leibniz = LeibnizAlgebra{d, parse_sparse(field(j, "bracket", where), {d, d, d}, where + ".bracket")};
        } else if (type == "operator") {
            o.op = parse_operator_body(j, where);
        } else if (type == "ns") {
            const int d = parse_count(field(j, "dim", where), where + ".dim", 1);
            const std::vector<int> s = {d, d, d, d};
            o.ns = NSAlgebra{d, parse_sparse(field(j, "lt", where), s, where + ".lt"),
                             parse_sparse(field(j, "rt", where), s, where + ".rt"),
                             parse_sparse(field(j, "md", where), s, where + ".md"),
                             parse_sparse(field(j, "dia", where), s, where + ".dia")};
        } else if (type == "representation" || type == "cochain" || type == "deformation") {
            // later passes
        } else {
            fail(where + ".type", "unknown type '" + type + "'");
        }
        m.objects.emplace(it.key(), std::move(o));
    }
    // pass 2: representations
    for (auto it = objs.begin(); it != objs.end(); ++it) {
        const std::string where = "objects." + it.key();
        const json& j = it.value();
        ManifestObject& o = m.objects.at(it.key());
        if (o.type != "representation") continue;
        o.algebra_ref = field(j, "algebra", where).get<std::string>();
        auto base = m.objects.find(o.algebra_ref);
        if (base == m.objects.end() || base->second.type != "algebra")
            fail(where + ".algebra", "dangling reference '" + o.algebra_ref + "'");
        const int d = base->second.algebra.dim;
        const int v = parse_count(field(j, "dimV", where), where + ".dimV", 1);
        o.rep = Representation{base->second.algebra, v,
                               parse_sparse(field(j, "rho_l", where), {d, d, v, v}, where + ".rho_l"),
                               parse_sparse(field(j, "rho_m", where), {d, v, d, v}, where + ".rho_m"),
                               parse_sparse(field(j, "rho_r", where), {v, d, d, v}, where + ".rho_r")};
    }
    // pass 3: cochains and deformations
    for (auto it = objs.begin(); it != objs.end(); ++it) {
        const std::string where = "objects." + it.key();
        const json& j = it.value();
        ManifestObject& o = m.objects.at(it.key());
        if (o.type != "cochain" && o.type != "deformation") continue;
        o.rep_ref = field(j, "representation", where).get<std::string>();
        auto rep = m.objects.find(o.rep_ref);
        if (rep == m.objects.end() || rep->second.type != "representation")
            fail(where + ".representation", "dangling reference '" + o.rep_ref + "'");
        if (o.type == "cochain") {
            o.cochain = parse_cochain_body(j, rep->second.rep, where);
        } else {
            o.phi_ref = field(j, "phi", where).get<std::string>();
            auto phi = m.objects.find(o.phi_ref);
            if (phi == m.objects.end() || phi->second.type != "cochain")
                fail(where + ".phi", "dangling reference '" + o.phi_ref + "'");
            const json& terms = field(j, "terms", where);
            if (!terms.is_array() || terms.empty()) fail(where + ".terms", "expected a nonempty array of matrices");
            const int d = rep->second.rep.algebra.dim, v = rep->second.rep.dimV;
            for (std::size_t n = 0; n < terms.size(); ++n)
                o.terms.push_back(LinearOperator{
                    v, d, parse_matrix(terms[n], d, v, where + ".terms[" + std::to_string(n) + "]")});
        }
    }
    return m;
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw manifest_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_manifest(ss.str());
}

nlohmann::ordered_json object_to_json(const ManifestObject& o) {
    ordered_json j;
    j["type"] = o.type;
    if (o.type == "algebra") {
        j["dim"] = o.algebra.dim;
        j["bracket"] = dump_sparse(o.algebra.bracket);
    } else if (o.type == "leibniz") {
        j["dim"] = o.leibniz.dim;
        j["bracket"] = dump_sparse(o.leibniz.bracket);
    } else if (o.type == "operator") {
        j["src"] = o.op.src_dim;
        j["dst"] = o.op.dst_dim;
        j["matrix"] = dump_matrix(o.op.matrix);
    } else if (o.type == "ns") {
        j["dim"] = o.ns.dim;
        j["lt"] = dump_sparse(o.ns.lt);
        j["rt"] = dump_sparse(o.ns.rt);
        j["md"] = dump_sparse(o.ns.md);
        j["dia"] = dump_sparse(o.ns.dia);
    } else if (o.type == "representation") {
        j["algebra"] = o.algebra_ref;
        j["dimV"] = o.rep.dimV;
        j["rho_l"] = dump_sparse(o.rep.rho_l);
        j["rho_m"] = dump_sparse(o.rep.rho_m);
        j["rho_r"] = dump_sparse(o.rep.rho_r);
    } else if (o.type == "cochain") {
        j["representation"] = o.rep_ref;
        j["degree"] = o.cochain.degree;
        j["direction"] = o.cochain.direction == Direction::g_to_V ? "g_to_V" : "V_to_g";
        j["coeffs"] = dump_cochain_coeffs(o.cochain);
    } else if (o.type == "deformation") {
        j["representation"] = o.rep_ref;
        j["phi"] = o.phi_ref;
        ordered_json terms = ordered_json::array();
        for (const auto& t : o.terms) terms.push_back(dump_matrix(t.matrix));
        j["terms"] = std::move(terms);
    }
    return j;
}

std::string save_manifest(const Manifest& m) {
    ordered_json doc;
    doc["schema_version"] = "1";
    ordered_json objs = ordered_json::object();
    for (const auto& [name, o] : m.objects) objs[name] = object_to_json(o);
    doc["objects"] = std::move(objs);
    return doc.dump(2) + "\n";
}

const ManifestObject& get_object(const Manifest& m, const std::string& name, const std::string& type) {
    auto it = m.objects.find(name);
    if (it == m.objects.end()) throw manifest_error("missing object '" + name + "'");
    if (it->second.type != type)
        throw manifest_error("object '" + name + "' has type " + it->second.type + ", expected " + type);
    return it->second;
}

ManifestObject wrap_algebra(ThreeLeibnizAlgebra a) {
    ManifestObject o;
    o.type = "algebra";
    o.algebra = std::move(a);
    return o;
}

ManifestObject wrap_operator(LinearOperator t) {
    ManifestObject o;
    o.type = "operator";
    o.op = std::move(t);
    return o;
}

ManifestObject wrap_ns(NSAlgebra n) {
    ManifestObject o;
    o.type = "ns";
    o.ns = std::move(n);
    return o;
}

ManifestObject wrap_cochain(Cochain c, std::string rep_ref) {
    ManifestObject o;
    o.type = "cochain";
    o.cochain = std::move(c);
    o.rep_ref = std::move(rep_ref);
    return o;
}

ManifestObject wrap_representation(Representation r, std::string algebra_ref) {
    ManifestObject o;
    o.type = "representation";
    o.rep = std::move(r);
    o.algebra_ref = std::move(algebra_ref);
    return o;
}

} // namespace l3kit
