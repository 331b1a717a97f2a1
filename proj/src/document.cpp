#include <lft/document.hpp>
#include <lft/error.hpp>

#include <cctype>
#include <map>

namespace lft
{

namespace
{

[[noreturn]] void invalid(const std::string &what)
{
    throw error(error_code::validation_error, what);
}

void check_fields(const json &obj, std::initializer_list<std::string_view> allowed, const std::string &where)
{
    if (!obj.is_object()) {
        invalid(where + " must be an object");
    }
    for (const auto &[key, value] : obj.items()) {
        bool ok = false;
        for (auto a : allowed) {
            ok = ok || key == a;
        }
        if (!ok) {
            invalid("unknown field '" + key + "' in " + where);
        }
    }
}

long positive_integer(const json &v, const std::string &what)
{
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1000000) {
        invalid(what + " must be a positive integer");
    }
    return static_cast<long>(v.get<long long>());
}

long parse_exponent_key(const std::string &key, const std::string &where)
{
    std::size_t pos = 0;
    if (!key.empty() && (key[0] == '-' || key[0] == '+')) {
        pos = 1;
    }
    if (pos == key.size() || key.size() - pos > 9) {
        invalid("bad exponent key '" + key + "' in " + where);
    }
    for (std::size_t i = pos; i < key.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(key[i]))) {
            invalid("exponent key '" + key + "' in " + where + " is not an integer");
        }
    }
    return std::stol(key);
}

coeff parse_coefficient(const json &v, const backend &ring, const std::string &where)
{
    if (!v.is_string()) {
        invalid(where + " must be a string");
    }
    try {
        return ring.parse_element(v.get<std::string>());
    } catch (const error &e) {
        invalid(where + ": " + e.what());
    }
}

backend backend_from_json(const json &v)
{
    if (v.is_string()) {
        return backend::parse(v.get<std::string>());
    }
    check_fields(v, {"name", "order", "radical_degree", "radicand"}, "backend");
    if (!v.contains("name") || !v["name"].is_string()) {
        invalid("backend needs a name");
    }
    const auto name = v["name"].get<std::string>();
    if (name == "rational") {
        if (v.size() != 1) {
            invalid("rational backend takes no parameters");
        }
        return backend::rational_field();
    }
    if (name != "extension") {
        invalid("unknown backend '" + name + "'");
    }
    if (!v.contains("order") || !v.contains("radical_degree") || !v.contains("radicand")
        || !v["radicand"].is_string()) {
        invalid("extension backend needs order, radical_degree and radicand");
    }
    return backend::extension(static_cast<int>(positive_integer(v["order"], "backend order")),
                              static_cast<int>(positive_integer(v["radical_degree"], "backend radical_degree")),
                              parse_rational(v["radicand"].get<std::string>()));
}

connection_piece piece_from_json(const json &v, const backend &ring, std::size_t index)
{
    const std::string where = "piece " + std::to_string(index);
    check_fields(v, {"point", "ram", "alpha", "alpha_prec", "regular"}, where);
    for (auto key : {"point", "ram", "alpha", "regular"}) {
        if (!v.contains(key)) {
            invalid(where + " is missing '" + key + "'");
        }
    }
    connection_piece p;
    const json &pt = v["point"];
    if (pt == "zero") {
        p.at = point::zero;
    } else if (pt == "infinity") {
        p.at = point::infinity;
    } else {
        invalid(where + ": point must be \"zero\" or \"infinity\"");
    }
    p.ram = positive_integer(v["ram"], where + " ram");

    const json &alpha = v["alpha"];
    if (!alpha.is_object()) {
        invalid(where + ": alpha must be an object keyed by exponent");
    }
    long prec = kExact;
    if (v.contains("alpha_prec")) {
        const json &ap = v["alpha_prec"];
        if (!ap.is_number_integer()) {
            invalid(where + ": alpha_prec must be an integer");
        }
        prec = static_cast<long>(ap.get<long long>());
    }
    std::map<long, coeff> terms;
    for (const auto &[key, value] : alpha.items()) {
        const long e = parse_exponent_key(key, where + " alpha");
        if (terms.count(e)) {
            invalid(where + ": duplicate exponent " + key);
        }
        if (e >= prec) {
            invalid(where + ": exponent " + key + " is not below alpha_prec");
        }
        terms[e] = parse_coefficient(value, ring, where + " alpha[" + key + "]");
    }
    if (!terms.empty() && terms.begin()->second.is_zero()) {
        invalid(where + ": leading coefficient of alpha at exponent " + std::to_string(terms.begin()->first)
                + " is zero");
    }
    if (terms.empty()) {
        p.alpha = trunc_series::zero(prec);
    } else {
        const long lo = terms.begin()->first;
        const long hi = terms.rbegin()->first;
        std::vector<coeff> c(static_cast<std::size_t>(hi - lo + 1));
        for (const auto &[e, x] : terms) {
            c[static_cast<std::size_t>(e - lo)] = x;
        }
        p.alpha = trunc_series::from_coeffs(lo, std::move(c), prec);
    }

    const json &reg = v["regular"];
    if (!reg.is_array() || reg.empty()) {
        invalid(where + ": regular must be a nonempty array");
    }
    for (std::size_t i = 0; i < reg.size(); ++i) {
        const std::string bw = where + " regular[" + std::to_string(i) + "]";
        check_fields(reg[i], {"c", "size"}, bw);
        if (!reg[i].contains("c")) {
            invalid(bw + " is missing 'c'");
        }
        const long size = reg[i].contains("size") ? positive_integer(reg[i]["size"], bw + " size") : 1;
        p.regular.push_back({parse_coefficient(reg[i]["c"], ring, bw + " c"), size});
    }
    return p;
}

} // namespace

document parse_document(std::string_view text, const std::optional<backend> &ring)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception &e) {
        throw error(error_code::parse_error, std::string("malformed JSON: ") + e.what());
    }
    check_fields(root, {"backend", "metadata", "pieces"}, "document");
    document doc;
    if (root.contains("backend")) {
        doc.ring = backend_from_json(root["backend"]);
        doc.declares_backend = true;
        if (ring && !ring->same_as(doc.ring)) {
            throw error(error_code::ring_mismatch,
                        "document declares backend " + doc.ring.spec() + " but " + ring->spec() + " was requested");
        }
    } else if (ring) {
        doc.ring = *ring;
    }
    if (root.contains("metadata")) {
        if (!root["metadata"].is_object()) {
            invalid("metadata must be an object");
        }
        doc.metadata = root["metadata"];
    }
    if (!root.contains("pieces") || !root["pieces"].is_array()) {
        invalid("document needs a 'pieces' array");
    }
    const json &pieces = root["pieces"];
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        doc.conn.pieces.push_back(piece_from_json(pieces[i], doc.ring, i));
    }
    return doc;
}

connection parse_connection(std::string_view text)
{
    return parse_document(text).conn;
}

json backend_to_json(const backend &ring)
{
    json j;
    if (ring.is_rational()) {
        j["name"] = "rational";
        return j;
    }
    j["name"] = "extension";
    j["order"] = ring.ring()->order();
    j["radical_degree"] = ring.ring()->radical_degree();
    j["radicand"] = to_string(ring.ring()->radicand());
    return j;
}

json piece_to_json(const connection_piece &piece)
{
    json j;
    j["point"] = std::string(point_name(piece.at));
    j["ram"] = piece.ram;
    json alpha = json::object();
    const auto &a = piece.alpha;
    for (long e = a.low(); e < a.end(); ++e) {
        const coeff c = a.at(e);
        if (!c.is_zero()) {
            alpha[std::to_string(e)] = c.to_string();
        }
    }
    j["alpha"] = alpha;
    if (!a.is_exact()) {
        j["alpha_prec"] = a.prec();
    }
    json reg = json::array();
    for (const auto &blk : piece.regular) {
        json b;
        b["c"] = blk.c.to_string();
        b["size"] = blk.size;
        reg.push_back(b);
    }
    j["regular"] = reg;
    return j;
}

json connection_to_json(const connection &conn, const backend &ring, const json &metadata)
{
    json j;
    if (!ring.is_rational()) {
        j["backend"] = backend_to_json(ring);
    }
    if (!metadata.is_null()) {
        j["metadata"] = metadata;
    }
    json pieces = json::array();
    for (const auto &p : conn.pieces) {
        pieces.push_back(piece_to_json(p));
    }
    j["pieces"] = pieces;
    return j;
}

std::string emit(const json &doc)
{
    return doc.dump(2) + "\n";
}

std::string emit_connection(const connection &conn, const backend &ring, const json &metadata)
{
    return emit(connection_to_json(conn, ring, metadata));
}

} // namespace lft
