#include "pha/io.hpp"

#include <fstream>

using nlohmann::json;

namespace pha {

namespace {

std::pair<size_t, size_t> parse_pair_key(const std::string& key, size_t m) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw pha_error("bracket key must be \"i,j\"");
    size_t i, j;
    try {
        i = std::stoul(key.substr(0, comma));
        j = std::stoul(key.substr(comma + 1));
    } catch (const std::exception&) {
        throw pha_error("bracket key must be \"i,j\"");
    }
    if (i < 1 || j < 1 || i > m || j > m || i >= j)
        throw pha_error("bracket key " + key + " out of range (need 1 <= i < j <= " +
                        std::to_string(m) + ")");
    return {i - 1, j - 1};
}

PoissonAlgebra builtin_from_json(const json& j, const FieldPtr& field,
                                 const std::vector<std::string>& param_names) {
    std::string name = j.at("builtin").get<std::string>();
    if (name == "weyl") return builtin_weyl(field, j.at("n").get<size_t>());
    if (name == "taft_linear") return builtin_taft_linear(field);
    if (name == "taft_quadratic") {
        Scalar c = j.contains("c")
                       ? Scalar(parse_cycrat(field, j.at("c").get<std::string>()))
                       : Scalar::parameter(field, "c");
        return builtin_taft_quadratic(field, c);
    }
    if (name == "skew") {
        auto rows = j.at("matrix");
        size_t m = rows.size();
        std::vector<std::vector<Scalar>> C(m, std::vector<Scalar>(m, Scalar::zero(field)));
        for (size_t a = 0; a < m; ++a) {
            if (rows[a].size() != m) throw pha_error("skew matrix must be square");
            for (size_t b = 0; b < m; ++b)
                C[a][b] = Scalar(parse_cycrat(field, rows[a][b].get<std::string>()));
        }
        return builtin_skew(field, C);
    }
    if (name == "filtered2") {
        Scalar q = j.contains("q")
                       ? Scalar(parse_cycrat(field, j.at("q").get<std::string>()))
                       : Scalar::one(field);
        return builtin_filtered2(field, j.at("choice").get<int>(), q);
    }
    (void)param_names;
    throw pha_error("unknown builtin algebra: " + name);
}

FiniteHopf hopf_from_json(const json& j, const FieldPtr& field) {
    std::string type = j.at("type").get<std::string>();
    if (type == "taft") return make_taft(j.at("n").get<unsigned>(), field);
    if (type == "group") {
        std::vector<unsigned> orders = j.at("orders").get<std::vector<unsigned>>();
        return make_group_algebra(orders, field);
    }
    throw pha_error("unknown hopf type: " + type);
}

} // namespace

PoissonAlgebra algebra_from_json(const json& j, FieldPtr field,
                                 const std::vector<std::string>& param_names) {
    if (j.contains("builtin")) return builtin_from_json(j, field, param_names);
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    size_t m = vars.size();
    WeightVector weights(m, 1);
    if (j.contains("weights")) {
        weights = j.at("weights").get<WeightVector>();
        if (weights.size() != m) throw pha_error("one weight per variable required");
    }
    std::vector<std::vector<Poly>> table(m, std::vector<Poly>(m, Poly(m)));
    if (j.contains("brackets"))
        for (const auto& [key, value] : j.at("brackets").items()) {
            auto [a, b] = parse_pair_key(key, m);
            table[a][b] = parse_poly(value.get<std::string>(), vars, param_names, field);
        }
    return make_poisson(std::move(field), std::move(vars), std::move(weights),
                        std::move(table));
}

json algebra_to_json(const PoissonAlgebra& P) {
    json j;
    j["vars"] = P.vars;
    j["weights"] = P.weights;
    json brackets = json::object();
    for (size_t i = 0; i < P.nvars(); ++i)
        for (size_t k = i + 1; k < P.nvars(); ++k)
            if (!P.table[i][k].is_zero())
                brackets[std::to_string(i + 1) + "," + std::to_string(k + 1)] =
                    P.table[i][k].to_string(P.vars);
    j["brackets"] = brackets;
    return j;
}

namespace {

JobInput parse_job_impl(const json& j) {
    JobInput in;
    unsigned order = 1;
    if (j.contains("field")) order = j.at("field").at("cyclotomic_order").get<unsigned>();
    in.field = make_field(order);

    std::vector<std::string> param_names;
    if (j.contains("params"))
        for (const auto& [name, value] : j.at("params").items()) {
            param_names.push_back(name);
            in.params[name] = parse_cycrat(in.field, value.get<std::string>());
        }

    if (j.contains("algebra")) {
        auto P = algebra_from_json(j.at("algebra"), in.field, param_names);
        if (!in.params.empty())
            for (auto& row : P.table)
                for (auto& p : row) p = p.evaluate_params(in.params);
        in.algebra = std::move(P);
    }
    if (j.contains("hopf")) in.hopf = hopf_from_json(j.at("hopf"), in.field);
    if (j.contains("action")) {
        if (!in.algebra || !in.hopf)
            throw pha_error("an action needs both an algebra and a hopf algebra");
        const auto& gens = j.at("action").at("generators");
        size_t m = in.algebra->nvars();
        std::vector<std::vector<Poly>> rows;
        for (const auto& gname : in.hopf->gen_names) {
            if (!gens.contains(gname))
                throw pha_error("missing action images for generator " + gname);
            std::vector<Poly> row(m, Poly(m));
            for (const auto& [var, img] : gens.at(gname).items()) {
                size_t v = 0;
                while (v < m && in.algebra->vars[v] != var) ++v;
                if (v == m) throw pha_error("unknown variable in action: " + var);
                row[v] = parse_poly(img.get<std::string>(), in.algebra->vars, param_names,
                                    in.field);
                if (!in.params.empty()) row[v] = row[v].evaluate_params(in.params);
            }
            rows.push_back(std::move(row));
        }
        in.action = make_action(*in.hopf, *in.algebra, std::move(rows));
    }
    return in;
}

} // namespace

JobInput parse_job(const json& j) {
    try {
        return parse_job_impl(j);
    } catch (const json::exception& e) {
        throw pha_error(std::string("schema violation: ") + e.what());
    }
}

JobInput load_job(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw pha_error("cannot open " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        throw pha_error(std::string("invalid JSON: ") + e.what());
    }
    return parse_job(j);
}

} // namespace pha
