#include "reflie/serialize.hpp"

#include <deque>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace reflie {

namespace {

template <class T, class F>
Json matrix_json(const Mat<T>& m, F scalar) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T, class F>
Mat<T> matrix_of_json(const Json& j, F scalar) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        throw std::runtime_error("matrix: expected a nonempty array of rows");
    const int r = static_cast<int>(j.size());
    const int c = static_cast<int>(j[0].size());
    std::vector<T> entries;
    entries.reserve(static_cast<size_t>(r) * c);
    for (const auto& row : j) {
        if (static_cast<int>(row.size()) != c)
            throw std::runtime_error("matrix: ragged rows");
        for (const auto& s : row) entries.push_back(scalar(s));
    }
    Mat<T> m(r, c, zero_like(entries.front()));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < c; ++k) m(i, k) = entries[static_cast<size_t>(i) * c + k];
    return m;
}

std::string l_type_json(LieType t) {
    switch (t) {
        case LieType::sl: return "linear";
        case LieType::so: return "orthogonal";
        case LieType::sp: return "symplectic";
    }
    throw std::logic_error("unknown Lie type");
}

}  // namespace

Json rational_json(const Rational& a) {
    auto [num, den] = rational_to_strings(a);
    return Json::array({num, den});
}

Rational rational_of_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw std::runtime_error("rational: expected [\"num\", \"den\"]");
    return rational_from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

Json cyc_json(const Cyc& a) {
    Json c = Json::array();
    for (const auto& x : a.coords()) c.push_back(rational_json(x));
    Json out;
    out["n"] = a.conductor();
    out["c"] = std::move(c);
    return out;
}

Cyc cyc_of_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("c"))
        throw std::runtime_error("cyclotomic: expected {\"n\", \"c\"}");
    const long n = j.at("n").get<long>();
    std::vector<Rational> coords;
    for (const auto& x : j.at("c")) coords.push_back(rational_of_json(x));
    return Cyc(n, std::move(coords));
}

Json rf_json(const RF& f) {
    auto poly = [](const Poly<Rational>& p) {
        Json out = Json::array();
        for (const auto& x : p.c) out.push_back(rational_json(x));
        return out;
    };
    Json out;
    out["num"] = poly(f.num());
    out["den"] = poly(f.den());
    return out;
}

RF rf_of_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::runtime_error("rational function: expected {\"num\", \"den\"}");
    auto poly = [](const Json& a) {
        std::vector<Rational> c;
        for (const auto& x : a) c.push_back(rational_of_json(x));
        return Poly<Rational>(std::move(c));
    };
    return RF(poly(j.at("num")), poly(j.at("den")));
}

Json params_json(const GroupParams& p) {
    Json out;
    out["d"] = p.d;
    out["e"] = p.e;
    out["r"] = p.r;
    return out;
}

GroupParams params_of_json(const Json& j) {
    GroupParams p{j.at("d").get<long>(), j.at("e").get<long>(), j.at("r").get<long>()};
    p.validate();
    return p;
}

Json rep_json(const Rep& rho) {
    long n = rho.conductor;
    for (const auto& [name, m] : rho.gen_images)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) n = std::lcm(n, m(i, j).conductor());
    Json doc;
    doc["field"] = Json{{"cyclotomic", n}};
    doc["dim"] = rho.dim;
    Json gens = Json::array();
    for (const auto& [name, m] : rho.gen_images) {
        Json g;
        g["name"] = name;
        g["matrix"] = matrix_json(m, [n](const Cyc& a) { return cyc_json(a.embedded(n)); });
        gens.push_back(std::move(g));
    }
    doc["generators"] = std::move(gens);
    if (rho.group && rho.group->params()) doc["group"] = params_json(*rho.group->params());
    doc["label"] = rho.label;
    return doc;
}

Rep rep_of_json(const Json& j, unsigned long long cap) {
    const Json& field = j.at("field");
    if (!field.contains("cyclotomic"))
        throw std::runtime_error("representation import: expected a cyclotomic field");
    const long n = field.at("cyclotomic").get<long>();
    if (!j.contains("group"))
        throw std::runtime_error("representation import: group parameters required");
    GroupPtr W = Group::make(params_of_json(j.at("group")), cap);
    const int dim = j.at("dim").get<int>();
    if (dim <= 0) throw std::runtime_error("representation import: dim must be positive");

    const auto& gens = W->generators();
    std::vector<Mat<Cyc>> images;
    for (const auto& [gname, gmono] : gens) {
        const Json* found = nullptr;
        for (const auto& g : j.at("generators"))
            if (g.at("name").get<std::string>() == gname) {
                found = &g;
                break;
            }
        if (!found) throw std::runtime_error("representation import: missing generator " + gname);
        Mat<Cyc> m = matrix_of_json<Cyc>(found->at("matrix"), [n](const Json& s) {
            Cyc a = cyc_of_json(s);
            if (n % a.conductor() != 0)
                throw std::runtime_error("representation import: entry conductor does not divide the field conductor");
            return a.embedded(n);
        });
        if (m.rows() != dim || m.cols() != dim)
            throw std::runtime_error("representation import: matrix size does not match dim for " + gname);
        images.push_back(std::move(m));
    }

    // Fill the image table along a breadth-first spanning tree of the
    // Cayley graph, then check every edge: consistency across the whole
    // multiplication table is equivalent to the images defining a
    // homomorphism.
    const int size = static_cast<int>(W->size());
    std::vector<int> gen_idx;
    for (const auto& [gname, gmono] : gens) gen_idx.push_back(W->index_of(gmono));
    const int id_idx = W->index_of(Monomial::id(W->rank()));
    auto table = std::make_shared<std::vector<Mat<Cyc>>>();
    table->assign(size, Mat<Cyc>());
    std::vector<bool> seen(size, false);
    (*table)[id_idx] = Mat<Cyc>::identity(dim, Cyc::zero(n));
    seen[id_idx] = true;
    std::deque<int> queue{id_idx};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (size_t k = 0; k < gen_idx.size(); ++k) {
            int y = W->compose_idx(x, gen_idx[k]);
            if (seen[y]) continue;
            (*table)[y] = (*table)[x] * images[k];
            seen[y] = true;
            queue.push_back(y);
        }
    }
    for (int x = 0; x < size; ++x) {
        if (!seen[x])
            throw std::runtime_error("representation import: generators do not generate the group");
        for (size_t k = 0; k < gen_idx.size(); ++k) {
            int y = W->compose_idx(x, gen_idx[k]);
            if (!((*table)[y] == (*table)[x] * images[k]))
                throw std::runtime_error("representation import: images are not a homomorphism at " +
                                         gens[k].first);
        }
    }

    Rep rho;
    rho.group = W;
    rho.conductor = n;
    rho.dim = dim;
    rho.label = j.value("label", std::string{});
    for (size_t k = 0; k < gens.size(); ++k) rho.gen_images.emplace_back(gens[k].first, images[k]);
    rho.eval = [W, table](const Monomial& g) {
        int i = W->index_of(g);
        if (i < 0) throw std::out_of_range("evaluate: element not in the group");
        return (*table)[i];
    };
    return rho;
}

Json hecke_json(const HeckeModel& m) {
    Json doc;
    doc["field"] = Json{{"function_field", true}};
    doc["dim"] = m.dim;
    Json gens = Json::array();
    for (const auto& [name, mat] : m.generators) {
        Json g;
        g["name"] = name;
        g["matrix"] = matrix_json(mat, [](const RF& f) { return rf_json(f); });
        gens.push_back(std::move(g));
    }
    doc["generators"] = std::move(gens);
    doc["label"] = m.label;
    return doc;
}

HeckeModel hecke_of_json(const Json& j) {
    const Json& field = j.at("field");
    if (!field.value("function_field", false))
        throw std::runtime_error("hecke import: expected \"function_field\": true");
    HeckeModel m;
    m.dim = j.at("dim").get<int>();
    if (m.dim <= 0) throw std::runtime_error("hecke import: dim must be positive");
    m.label = j.value("label", std::string{});
    for (const auto& g : j.at("generators")) {
        Mat<RF> mat = matrix_of_json<RF>(g.at("matrix"), [](const Json& s) { return rf_of_json(s); });
        if (mat.rows() != m.dim || mat.cols() != m.dim)
            throw std::runtime_error("hecke import: matrix size does not match dim");
        m.generators.emplace_back(g.at("name").get<std::string>(), std::move(mat));
    }
    if (m.generators.empty()) throw std::runtime_error("hecke import: no generators");
    return m;
}

HeckeModel load_model(const std::string& path) {
    HeckeModel m = hecke_of_json(read_json_file(path));
    HeckeRelationReport rep = check_relations(m);
    if (!rep.ok()) {
        std::string msg = "model relations violated:";
        for (const auto& f : rep.failures) msg += " [" + f + "]";
        throw std::runtime_error(msg);
    }
    return m;
}

void save_model(const HeckeModel& m, const std::string& path) {
    write_json_file(hecke_json(m), path);
}

Json classification_json(const Classification& cls) {
    Json doc;
    doc["schema_version"] = 1;
    Json grp;
    grp["name"] = cls.group->params() ? cls.group->params()->name() : std::string("subgroup");
    if (cls.group->params()) grp["params"] = params_json(*cls.group->params());
    grp["order"] = cls.group->size();
    doc["group"] = std::move(grp);

    Json recs = Json::array();
    for (const auto& rec : cls.records) {
        Json r;
        r["label"] = rec.label;
        r["dim"] = rec.dim;
        r["is_reflection_rep"] = rec.reflection;
        r["in_QRef"] = rec.quasi_reflection;
        r["in_LambdaRef"] = rec.lambda_ref;
        Json xg = Json::array();
        for (int t : rec.allowed_twists) xg.push_back(cls.records[t].label);
        r["X_group"] = std::move(xg);
        r["partner"] = rec.dual_twist >= 0 ? Json(cls.records[rec.dual_twist].label) : Json(nullptr);
        r["L_type"] = l_type_json(rec.type);
        r["predicted_derived_dim"] = rec.predicted_derived_dim;
        r["approx_class_id"] = rec.approx_class;
        recs.push_back(std::move(r));
    }
    doc["records"] = std::move(recs);

    Json pred;
    pred["center_dim"] = cls.center_dim;
    Json qref = Json::array();
    Json irrprime = Json::array();
    for (const auto& c : cls.classes) {
        if (!c.counted) continue;
        const auto& rep = cls.records[c.rep];
        Json e;
        e["rep"] = rep.label;
        e["dim"] = rep.dim;
        if (c.quasi_reflection) {
            e["contribution"] = c.contribution;
            qref.push_back(std::move(e));
        } else {
            e["L_type"] = l_type_json(rep.type);
            e["contribution"] = c.contribution;
            irrprime.push_back(std::move(e));
        }
    }
    pred["qref_classes"] = std::move(qref);
    pred["irrprime_classes"] = std::move(irrprime);
    pred["derived_dim"] = cls.predicted_derived;
    pred["total_dim"] = cls.predicted_total;
    doc["prediction"] = std::move(pred);
    return doc;
}

Json verify_json(const VerifyReport& report) {
    Json doc;
    doc["schema_version"] = 1;
    doc["group"] = report.group_name;
    doc["order"] = report.group_order;
    doc["reflection_classes"] = report.reflection_classes;
    Json reps = Json::array();
    for (const auto& v : report.reps) {
        Json r;
        r["label"] = v.label;
        r["dim"] = v.dim;
        r["predicted_L"] = v.predicted_type;
        r["predicted_dim"] = v.predicted_derived;
        r["modp_dim"] = v.modp_derived >= 0 ? Json(v.modp_derived) : Json(nullptr);
        if (v.prime > 0) r["prime"] = v.prime;
        if (v.exact_derived) r["exact_dim"] = *v.exact_derived;
        r["verdict"] = v.pass ? "pass" : "fail";
        reps.push_back(std::move(r));
    }
    doc["representations"] = std::move(reps);
    Json tot;
    tot["predicted_derived"] = report.predicted_derived;
    tot["predicted_total"] = report.predicted_total;
    if (report.joint) {
        tot["joint_full"] = report.joint->full;
        tot["joint_derived"] = report.joint->derived;
    }
    tot["joint_matches"] = report.joint_matches;
    if (report.center) {
        Json c;
        c["class_sums_in_closure"] = report.center->class_sums_in_closure;
        c["class_sums_central"] = report.center->class_sums_central;
        c["dims_match"] = report.center->dims_match;
        tot["center"] = std::move(c);
    }
    if (report.split) {
        Json s;
        s["full"] = report.split->full;
        s["plus"] = report.split->plus;
        s["minus"] = report.split->minus;
        s["split"] = report.split->split;
        tot["split"] = std::move(s);
    }
    tot["all_pass"] = report.all_pass;
    doc["totals"] = std::move(tot);
    return doc;
}

Json scan_json(const SignatureScan& scan) {
    Json out = Json::array();
    for (const auto& iv : scan.intervals) {
        Json e;
        e["from"] = iv.from;
        e["to"] = iv.to;
        e["signature"] = Json::array({iv.plus, iv.minus});
        out.push_back(std::move(e));
    }
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const std::exception& ex) {
        throw std::runtime_error(path + ": " + ex.what());
    }
}

void write_json_file(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace reflie
