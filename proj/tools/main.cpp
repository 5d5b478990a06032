// Command-line front end: enumeration, classification, closure
// verification, branching tables and unitarizing forms for the reflection
// groups G(de,e,r), with table or JSON output.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "reflie/multipartition.hpp"
#include "reflie/serialize.hpp"

using namespace reflie;

namespace {

struct Common {
    std::string format = "table";
    unsigned long long max_order = 10000;
    int jobs = 0;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--max-order", c.max_order, "Refuse groups larger than this")
        ->capture_default_str();
    cmd->add_option("--jobs", c.jobs, "Worker threads, 0 = all cores");
}

struct ParamArgs {
    long d = 1, e = 1, r = 1;
};

void add_params(CLI::App* cmd, ParamArgs& p) {
    cmd->add_option("d", p.d, "d of G(de,e,r)")->required();
    cmd->add_option("e", p.e, "e of G(de,e,r)")->required();
    cmd->add_option("r", p.r, "rank")->required();
}

int effective_jobs(const Common& c) {
    if (c.jobs > 0) return c.jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void print_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows) {
        if (row.size() > width.size()) width.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

Json group_json(const GroupParams& p) {
    Json g;
    g["name"] = p.name();
    g["params"] = params_json(p);
    g["order"] = p.order();
    return g;
}

void emit(const Common& c, const Json& doc) {
    if (c.format == "json") std::cout << doc.dump(2) << "\n";
}

int cmd_irreps(const Common& c, const ParamArgs& pa) {
    GroupParams p{pa.d, pa.e, pa.r};
    p.validate();
    if (p.order() > c.max_order) throw CapExceeded(p.name() + " exceeds --max-order");
    const long m = p.level();

    Json orbits = Json::array();
    std::vector<std::vector<std::string>> rows{
        {"shapes", "A", "ambient", "component", "labels"}};
    unsigned long long total = 0;
    for (const auto& mp : multipartitions(static_cast<int>(m), static_cast<int>(p.r))) {
        if (!(canonical_shift(mp, p.d) == mp)) continue;
        const long a = aut_order(mp, p.d);
        const long ambient = static_cast<long>(standard_tableaux(mp).size());
        const long comp = ambient / a;
        std::vector<std::string> shapes;
        for (long k = 0; k * p.d < m; ++k) {
            std::string s = mp.shifted(k * p.d).label();
            if (std::find(shapes.begin(), shapes.end(), s) == shapes.end()) shapes.push_back(s);
        }
        std::vector<std::string> labels;
        for (long j = 0; j < a; ++j)
            labels.push_back(a > 1 ? mp.label() + "#" + std::to_string(j) : mp.label());
        total += static_cast<unsigned long long>(a) * comp * comp;

        Json o;
        o["shapes"] = shapes;
        o["aut"] = a;
        o["ambient_dim"] = ambient;
        o["component_dim"] = comp;
        o["labels"] = labels;
        orbits.push_back(std::move(o));

        std::string shape_cell, label_cell;
        for (size_t i = 0; i < shapes.size(); ++i)
            shape_cell += (i ? " " : "") + shapes[i];
        for (size_t i = 0; i < labels.size(); ++i)
            label_cell += (i ? " " : "") + labels[i];
        rows.push_back({shape_cell, std::to_string(a), std::to_string(ambient),
                        std::to_string(comp), label_cell});
    }
    if (total != p.order())
        throw std::logic_error("irreps: dimension squares do not sum to the group order");

    Json doc;
    doc["schema_version"] = 1;
    doc["group"] = group_json(p);
    doc["orbits"] = std::move(orbits);
    doc["sum_of_squares"] = total;
    emit(c, doc);
    if (c.format == "table") {
        std::cout << p.name() << ", order " << p.order() << "\n";
        print_rows(rows);
        std::cout << "sum of squares: " << total << "\n";
    }
    return 0;
}

int cmd_classify(const Common& c, const ParamArgs& pa) {
    GroupParams p{pa.d, pa.e, pa.r};
    p.validate();
    Classification cls = classify(Group::make(p, c.max_order));
    Json doc = classification_json(cls);
    emit(c, doc);
    if (c.format == "table") {
        std::cout << p.name() << ", order " << cls.group->size() << ", reflection classes "
                  << cls.reflection_classes.size() << "\n";
        std::vector<std::vector<std::string>> rows{
            {"label", "dim", "Ref", "QRef", "LambdaRef", "L", "derived", "class"}};
        for (const auto& rec : cls.records)
            rows.push_back({rec.label, std::to_string(rec.dim), rec.reflection ? "y" : "-",
                            rec.quasi_reflection ? "y" : "-", rec.lambda_ref ? "y" : "-",
                            predicted_type_name(rec), std::to_string(rec.predicted_derived_dim),
                            std::to_string(rec.approx_class)});
        print_rows(rows);
        std::cout << "prediction: center " << cls.center_dim << " + derived "
                  << cls.predicted_derived << " = " << cls.predicted_total << "\n";
    }
    return 0;
}

int cmd_lie_dim(const Common& c, const ParamArgs& pa, const std::string& rep_label, long mod_p,
                bool exact) {
    GroupParams p{pa.d, pa.e, pa.r};
    p.validate();
    GroupPtr W = Group::make(p, c.max_order);
    std::vector<Rep> reps = irreps(W);
    std::vector<size_t> selected;
    for (size_t i = 0; i < reps.size(); ++i)
        if (rep_label.empty() || reps[i].label == rep_label) selected.push_back(i);
    if (selected.empty()) throw std::invalid_argument("no representation labeled " + rep_label);

    Json out = Json::array();
    std::vector<std::vector<std::string>> rows{{"label", "dim", "full", "derived", "prime"}};
    for (size_t i : selected) {
        RepClosureDims dims;
        std::uint32_t prime = 0;
        if (exact) {
            dims = rep_closure_dims(reps[i]);
        } else if (mod_p > 0) {
            dims = rep_closure_dims_mod_p(reps[i], static_cast<std::uint32_t>(mod_p));
            prime = static_cast<std::uint32_t>(mod_p);
        } else {
            auto [d, pr] = closure_dims_auto_prime(reps[i]);
            dims = d;
            prime = pr;
        }
        Json r;
        r["label"] = reps[i].label;
        r["dim"] = reps[i].dim;
        r["full"] = dims.full;
        r["derived"] = dims.derived;
        if (prime > 0) r["prime"] = prime;
        out.push_back(std::move(r));
        rows.push_back({reps[i].label, std::to_string(reps[i].dim), std::to_string(dims.full),
                        std::to_string(dims.derived), prime > 0 ? std::to_string(prime) : "-"});
    }
    Json doc;
    doc["schema_version"] = 1;
    doc["group"] = group_json(p);
    doc["mode"] = exact ? "exact" : (mod_p > 0 ? "mod-p" : "mod-p-auto");
    doc["closures"] = std::move(out);
    emit(c, doc);
    if (c.format == "table") {
        std::cout << p.name() << ", " << doc["mode"].get<std::string>() << " closure dims\n";
        print_rows(rows);
    }
    return 0;
}

int cmd_verify(const Common& c, const ParamArgs& pa, bool oracle) {
    GroupParams p{pa.d, pa.e, pa.r};
    p.validate();
    GroupPtr W = Group::make(p, c.max_order);
    Classification cls = classify(W);
    const bool with_joint = oracle && W->size() <= 400;
    VerifyReport report =
        verify_group(cls, VerifyMode::modp_first, with_joint, effective_jobs(c));
    Json doc = verify_json(report);
    emit(c, doc);
    if (c.format == "table") {
        std::cout << report.group_name << ", order " << report.group_order << "\n";
        std::vector<std::vector<std::string>> rows{
            {"label", "dim", "L", "predicted", "mod-p", "prime", "exact", "verdict"}};
        for (const auto& v : report.reps)
            rows.push_back({v.label, std::to_string(v.dim), v.predicted_type,
                            std::to_string(v.predicted_derived),
                            v.modp_derived >= 0 ? std::to_string(v.modp_derived) : "-",
                            v.prime > 0 ? std::to_string(v.prime) : "-",
                            v.exact_derived ? std::to_string(*v.exact_derived) : "-",
                            v.pass ? "pass" : "FAIL"});
        print_rows(rows);
        std::cout << "predicted: center " << report.reflection_classes << " + derived "
                  << report.predicted_derived << " = " << report.predicted_total << "\n";
        if (report.joint)
            std::cout << "joint closure: full " << report.joint->full << ", derived "
                      << report.joint->derived << (report.joint_matches ? " (matches)" : " (MISMATCH)")
                      << "\n";
        else if (oracle)
            std::cout << "joint closure: skipped (order > 400)\n";
        if (report.center)
            std::cout << "center: class sums "
                      << (report.center->class_sums_in_closure ? "in closure" : "NOT IN CLOSURE")
                      << ", " << (report.center->class_sums_central ? "central" : "NOT CENTRAL")
                      << ", dims " << (report.center->dims_match ? "match" : "MISMATCH") << "\n";
        if (report.split)
            std::cout << "det split: " << report.split->plus << " + " << report.split->minus
                      << " = " << report.split->full
                      << (report.split->split ? " (splits)" : " (DOES NOT SPLIT)") << "\n";
        std::cout << (report.all_pass ? "all checks pass" : "VERIFICATION FAILED") << "\n";
    }
    return report.all_pass ? 0 : 1;
}

int cmd_branch(const Common& c, const ParamArgs& pa) {
    GroupParams p{pa.d, pa.e, pa.r};
    p.validate();
    if (p.r < 2) throw std::invalid_argument("branch: rank must be at least 2");
    GroupParams sub_p{p.d, p.e, p.r - 1};
    GroupPtr W = Group::make(p, c.max_order);
    GroupPtr W0 = Group::make(sub_p, c.max_order);
    std::vector<Rep> reps = irreps(W);
    std::vector<Rep> sub_reps = irreps(W0);
    std::vector<Character> sub_table;
    for (const auto& rho : sub_reps) sub_table.push_back(Character::of(rho));

    Json out = Json::array();
    std::vector<std::vector<std::string>> rows{{"label", "dim", "restriction"}};
    for (const auto& rho : reps) {
        std::vector<long> mult = restriction_multiplicities(Character::of(rho), W0, sub_table);
        Json parts = Json::array();
        std::string cell;
        long dim_sum = 0;
        for (size_t k = 0; k < mult.size(); ++k) {
            if (mult[k] == 0) continue;
            Json e;
            e["label"] = sub_reps[k].label;
            e["mult"] = mult[k];
            parts.push_back(std::move(e));
            if (!cell.empty()) cell += " + ";
            if (mult[k] > 1) cell += std::to_string(mult[k]) + "*";
            cell += sub_reps[k].label;
            dim_sum += mult[k] * sub_reps[k].dim;
        }
        if (dim_sum != rho.dim)
            throw std::logic_error("branch: restriction dimensions do not add up for " + rho.label);
        Json r;
        r["label"] = rho.label;
        r["dim"] = rho.dim;
        r["components"] = std::move(parts);
        out.push_back(std::move(r));
        rows.push_back({rho.label, std::to_string(rho.dim), cell});
    }
    Json doc;
    doc["schema_version"] = 1;
    doc["group"] = group_json(p);
    doc["subgroup"] = group_json(sub_p);
    doc["rows"] = std::move(out);
    emit(c, doc);
    if (c.format == "table") {
        std::cout << p.name() << " restricted to " << sub_p.name() << "\n";
        print_rows(rows);
    }
    return 0;
}

int cmd_unitary(const Common& c, const std::string& builtin, const std::string& model_path,
                long scan_samples) {
    HeckeModel model;
    if (!builtin.empty()) {
        model = builtin_d4();
    } else {
        model = load_model(model_path);
    }
    HeckeRelationReport rel = check_relations(model);
    if (!rel.ok()) {
        std::string msg = "model relations violated:";
        for (const auto& f : rel.failures) msg += " [" + f + "]";
        throw std::runtime_error(msg);
    }
    Mat<RF> j = solve_form(model);

    Json doc;
    doc["schema_version"] = 1;
    doc["label"] = model.label;
    doc["dim"] = model.dim;
    Json rels;
    auto pair_names = [&](const std::vector<std::pair<int, int>>& ps) {
        Json a = Json::array();
        for (auto [x, y] : ps)
            a.push_back(Json::array({model.generators[x].first, model.generators[y].first}));
        return a;
    };
    rels["commuting"] = pair_names(rel.commuting);
    rels["braiding"] = pair_names(rel.braiding);
    doc["relations"] = std::move(rels);
    Json form = Json::array();
    Json form_str = Json::array();
    for (int a = 0; a < j.rows(); ++a) {
        Json row = Json::array(), srow = Json::array();
        for (int b = 0; b < j.cols(); ++b) {
            row.push_back(rf_json(j(a, b)));
            srow.push_back(j(a, b).str());
        }
        form.push_back(std::move(row));
        form_str.push_back(std::move(srow));
    }
    doc["form"] = std::move(form);
    doc["form_display"] = std::move(form_str);

    SignatureScan scan;
    if (scan_samples > 0) {
        scan = signature_scan(j, static_cast<int>(scan_samples), std::acos(0.0));
        doc["scan"] = scan_json(scan);
        doc["boundaries"] = scan.boundaries;
        doc["max_hermitian_defect"] = scan.max_hermitian_defect;
        if (!scan.indeterminate.empty()) doc["indeterminate"] = scan.indeterminate;
    }
    emit(c, doc);
    if (c.format == "table") {
        std::cout << model.label << ", dim " << model.dim << "\n";
        std::cout << "invariant form:\n";
        std::vector<std::vector<std::string>> rows;
        for (int a = 0; a < j.rows(); ++a) {
            std::vector<std::string> row;
            for (int b = 0; b < j.cols(); ++b) row.push_back(j(a, b).str());
            rows.push_back(std::move(row));
        }
        print_rows(rows);
        if (scan_samples > 0) {
            std::cout << "signature on |q| = 1, q = exp(ix), x in (0, pi/2]:\n";
            std::vector<std::vector<std::string>> srows{{"from", "to", "signature"}};
            for (const auto& iv : scan.intervals) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.6f", iv.from);
                std::string from = buf;
                std::snprintf(buf, sizeof buf, "%.6f", iv.to);
                std::string to = buf;
                srows.push_back({from, to, "(" + std::to_string(iv.plus) + "," +
                                               std::to_string(iv.minus) + ")"});
            }
            print_rows(srows);
            std::string bs;
            for (double b : scan.boundaries) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.8f", b);
                bs += (bs.empty() ? "" : ", ") + std::string(buf);
            }
            std::cout << "boundaries: " << (bs.empty() ? "none" : bs) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reflection group representations, Lie closures and unitarizing forms"};
    app.require_subcommand(1);

    Common common;
    ParamArgs params;
    std::string rep_label;
    long mod_p = 0;
    bool exact = false;
    bool oracle = false;
    std::string builtin, model_path;
    long scan_samples = 0;

    auto* irreps_cmd = app.add_subcommand("irreps", "List shape orbits and component dimensions");
    add_params(irreps_cmd, params);
    add_common(irreps_cmd, common);

    auto* classify_cmd = app.add_subcommand("classify", "Classify irreducibles and predict closures");
    add_params(classify_cmd, params);
    add_common(classify_cmd, common);

    auto* lie_cmd = app.add_subcommand("lie-dim", "Closure dimensions of reflection images");
    add_params(lie_cmd, params);
    lie_cmd->add_option("--rep", rep_label, "Only the representation with this label");
    auto* modp_opt = lie_cmd->add_option("--mod-p", mod_p, "Closure over F_p at this prime");
    lie_cmd->add_flag("--exact", exact, "Exact closure over the cyclotomic field")
        ->excludes(modp_opt);
    add_common(lie_cmd, common);

    auto* verify_cmd = app.add_subcommand("verify", "Check closure dimensions against predictions");
    add_params(verify_cmd, params);
    verify_cmd->add_flag("--oracle", oracle, "Also run the joint closure oracle (order <= 400)");
    add_common(verify_cmd, common);

    auto* branch_cmd = app.add_subcommand("branch", "Restriction table to the corank-1 subgroup");
    add_params(branch_cmd, params);
    add_common(branch_cmd, common);

    auto* unitary_cmd = app.add_subcommand("unitary", "Solve the invariant form of a Hecke model");
    auto* builtin_opt = unitary_cmd->add_option("--builtin", builtin, "Built-in model")
                            ->check(CLI::IsMember({"d4"}));
    unitary_cmd->add_option("--model", model_path, "Model file (function field)")
        ->excludes(builtin_opt);
    unitary_cmd->add_option("--scan", scan_samples, "Signature scan sample count");
    add_common(unitary_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (irreps_cmd->parsed()) return cmd_irreps(common, params);
        if (classify_cmd->parsed()) return cmd_classify(common, params);
        if (lie_cmd->parsed()) return cmd_lie_dim(common, params, rep_label, mod_p, exact);
        if (verify_cmd->parsed()) return cmd_verify(common, params, oracle);
        if (branch_cmd->parsed()) return cmd_branch(common, params);
        if (unitary_cmd->parsed()) {
            if (builtin.empty() == model_path.empty())
                throw std::invalid_argument("unitary: give exactly one of --builtin or --model");
            if (scan_samples < 0) throw std::invalid_argument("unitary: --scan must be positive");
            return cmd_unitary(common, builtin, model_path, scan_samples);
        }
    } catch (const CapExceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
