#include "polsym/json_io.hpp"

#include <fstream>
#include <set>

namespace polsym {

namespace {

Json term_json(std::span<const int> index, Complex c) {
    Json t;
    t["index"] = std::vector<int>(index.begin(), index.end());
    t["re"] = c.real();
    t["im"] = c.imag();
    return t;
}

struct ParsedHeader {
    int n;
    int m;
};

ParsedHeader parse_header(const Json& j, const char* where) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("terms"))
        throw std::invalid_argument(std::string(where) + ": expected {n, m, terms}");
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    if (n < 1 || m < 1)
        throw std::invalid_argument(std::string(where) + ": n and m must be >= 1");
    return {n, m};
}

// Shared walk over the term list; calls sink(index, value) per term and
// rejects duplicate index arrays.
template <typename Sink>
void parse_terms(const Json& j, const ParsedHeader& h, const char* where, Sink&& sink) {
    std::set<std::vector<int>> seen;
    for (const Json& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("index"))
            throw std::invalid_argument(std::string(where) + ": malformed term");
        std::vector<int> index = t.at("index").get<std::vector<int>>();
        if (static_cast<int>(index.size()) != h.m)
            throw std::invalid_argument(std::string(where) + ": term index length != m");
        for (int v : index)
            if (v < 1 || v > h.n)
                throw std::invalid_argument(std::string(where) + ": term index entry outside 1..n");
        if (!seen.insert(index).second)
            throw std::invalid_argument(std::string(where) + ": duplicate term index");
        const double re = t.value("re", 0.0);
        const double im = t.value("im", 0.0);
        sink(std::move(index), Complex(re, im));
    }
}

}  // namespace

Json to_json(const HomogeneousPolynomial& P) {
    Json j;
    j["n"] = P.n();
    j["m"] = P.degree();
    j["terms"] = Json::array();
    for (const auto& [key, c] : P.terms())
        if (c != Complex(0.0)) j["terms"].push_back(term_json(key, c));
    return j;
}

Json to_json(const MultilinearForm& L) {
    Json j;
    j["n"] = L.n();
    j["m"] = L.arity();
    j["terms"] = Json::array();
    std::vector<int> e(static_cast<std::size_t>(L.arity()), 1);
    std::int64_t o = 0;
    do {
        const Complex c = L.values()[static_cast<std::size_t>(o)];
        if (c != Complex(0.0)) j["terms"].push_back(term_json(e, c));
        ++o;
    } while (detail::advance_entries(L.n(), e));
    return j;
}

Json to_json(const SchurMultiplier& A) {
    Json j;
    j["n"] = A.n();
    j["m"] = A.arity();
    j["terms"] = Json::array();
    std::vector<int> e(static_cast<std::size_t>(A.arity()), 1);
    std::int64_t o = 0;
    do {
        const Complex c = A.values()[static_cast<std::size_t>(o)];
        if (c != Complex(0.0)) j["terms"].push_back(term_json(e, c));
        ++o;
    } while (detail::advance_entries(A.n(), e));
    return j;
}

Json to_json(const NormEstimate& est) {
    Json j;
    j["lower"] = est.lower;
    if (est.upper)
        j["upper"] = *est.upper;
    else
        j["upper"] = nullptr;
    j["method"] = norm_method_name(est.method);
    Json witness = Json::array();
    for (const ComplexVector& vec : est.witness) {
        Json v = Json::array();
        for (const Complex& c : vec) {
            Json entry;
            entry["re"] = c.real();
            entry["im"] = c.imag();
            v.push_back(std::move(entry));
        }
        witness.push_back(std::move(v));
    }
    j["witness"] = std::move(witness);
    j["seed"] = est.seed;
    j["restarts"] = est.restarts;
    j["iters"] = est.iters;
    j["grid"] = est.grid;
    return j;
}

HomogeneousPolynomial poly_from_json(const Json& j) {
    const ParsedHeader h = parse_header(j, "poly_from_json");
    HomogeneousPolynomial P(h.n, h.m);
    parse_terms(j, h, "poly_from_json", [&](std::vector<int> index, Complex c) {
        P.set_coeff(MultiIndex(std::move(index), h.n), c);  // rejects non-sorted keys
    });
    return P;
}

MultilinearForm form_from_json(const Json& j) {
    const ParsedHeader h = parse_header(j, "form_from_json");
    MultilinearForm L(h.n, h.m);
    parse_terms(j, h, "form_from_json",
                [&](std::vector<int> index, Complex c) { L.set_coeff(index, c); });
    return L;
}

SchurMultiplier multiplier_from_json(const Json& j) {
    const ParsedHeader h = parse_header(j, "multiplier_from_json");
    SchurMultiplier A(h.n, h.m);
    parse_terms(j, h, "multiplier_from_json",
                [&](std::vector<int> index, Complex c) { A.set_coeff(index, c); });
    return A;
}

HomogeneousPolynomial load_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_poly_file: cannot open " + path);
    Json j;
    in >> j;
    return poly_from_json(j);
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_text_file: cannot open " + path);
    out << contents;
    if (!out) throw std::runtime_error("write_text_file: write failed for " + path);
}

}  // namespace polsym
