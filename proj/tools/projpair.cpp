// projpair: batch front end for the double-embedding-problem engine.
// One subcommand per invocation; reads JSON files, writes one JSON result.

#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "projpair/catalog.hpp"
#include "projpair/io.hpp"

namespace pp = projpair;
using pp::Json;

namespace {

struct GlobalOptions {
    int threads = int(std::thread::hardware_concurrency());
    int cap = pp::kDefaultOrderCap;
    std::string output = "stdout";
};

int emit(const std::string& status, Json payload, long long elapsed_ms,
         const GlobalOptions& opts) {
    Json result;
    result["status"] = status;
    result["payload"] = std::move(payload);
    result["elapsed_ms"] = elapsed_ms;
    std::string text = result.dump(2) + "\n";
    if (opts.output == "stdout" || opts.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.output);
        if (!out) {
            std::cerr << "cannot open output path: " << opts.output << "\n";
            return 2;
        }
        out << text;
    }
    if (status == "invalid_input") return 2;
    if (status == "cap_exceeded") return 3;
    return 0;
}

/// eta file: {"format_version": 1, "gen_images": [...]} — images in H of the
/// DEP file's distinguished generator words, in file order.
pp::SubHom parse_eta(const std::string& path, const pp::DepFile& file) {
    Json j = pp::read_json_file(path);
    pp::require_format_version(j, path);
    if (!j.contains("gen_images"))
        throw pp::InvalidInput(path + ": missing \"gen_images\"");
    std::vector<pp::Elem> images = j["gen_images"].get<std::vector<pp::Elem>>();
    if (images.size() != file.distinguished_gens.size())
        throw pp::InvalidInput(path + ": expected one image per distinguished "
                               "generator (" +
                               std::to_string(file.distinguished_gens.size()) + ")");
    pp::EmbeddedGroup eg = pp::subgroup_as_group(file.dep.Gm());
    std::vector<pp::Elem> local_of(std::size_t(file.dep.L()->order), -1);
    for (pp::Elem i = 0; i < eg.group->order; ++i)
        local_of[std::size_t(eg.inclusion(i))] = i;
    std::vector<std::pair<pp::Elem, pp::Elem>> pins;
    for (std::size_t i = 0; i < images.size(); ++i)
        pins.emplace_back(local_of[std::size_t(file.distinguished_gens[i])], images[i]);
    pp::GroupHom local = pp::hom_from_pins(eg.group, file.dep.H, pins, path);
    std::vector<pp::Elem> map(std::size_t(file.dep.L()->order), -1);
    for (pp::Elem i = 0; i < eg.group->order; ++i)
        map[std::size_t(eg.inclusion(i))] = local(i);
    return pp::make_subhom(file.dep.Gm(), file.dep.H, std::move(map));
}

Json dep_to_json(const pp::DoubleEmbeddingProblem& dep) {
    Json j;
    j["L"] = pp::group_to_json(dep.L());
    j["distinguished"] = pp::subgroup_to_json(dep.Gm());
    j["H"] = pp::group_to_json(dep.H);
    j["B"] = pp::group_to_json(dep.B);
    j["G"] = pp::subgroup_to_json(dep.G);
    j["A"] = pp::subgroup_to_json(dep.A);
    j["beta"] = pp::hom_to_json(dep.beta);
    j["nu"] = pp::hom_to_json(dep.nu);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite double-embedding-problem toolkit"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--threads", opts.threads, "Worker thread count");
    app.add_option("--cap", opts.cap, "Maximum constructed group order");
    app.add_option("--output", opts.output, "Result path or \"stdout\"");

    std::string dep_path, theta_path, eta_path, file_path, group_ref;
    bool want_all = false, via_fiber = false, class_level = false;
    std::string prescribe_path;
    std::string formation_kind = "all";
    int formation_p = 2;
    std::vector<std::string> formation_factors;

    CLI::App* solve = app.add_subcommand("solve", "Weak solutions of a DEP file");
    solve->add_option("dep", dep_path, "DEP file")->required();
    solve->add_flag("--all", want_all, "Enumerate every solution");
    solve->add_option("--prescribe", prescribe_path,
                      "Lower solution file; lift with this restriction");
    solve->add_flag("--via-fiber", via_fiber,
                    "Use the fiber-product lifting algorithm (with --prescribe)");

    CLI::App* dominate = app.add_subcommand("dominate", "Split dominating DEP");
    dominate->add_option("dep", dep_path, "DEP file")->required();
    dominate->add_option("theta", theta_path, "Higher solution file")->required();
    dominate->add_option("eta", eta_path, "Lower solution file")->required();

    CLI::App* split = app.add_subcommand("split", "Split a pair over a subgroup N");
    split->add_option("pair", file_path, "Pair file (with optional \"N\" words)")
        ->required();

    CLI::App* complement =
        app.add_subcommand("complement", "Normal complement of the distinguished subgroup");
    complement->add_option("pair", file_path, "Pair file")->required();

    CLI::App* h1 = app.add_subcommand("h1", "Cocycle restriction surjectivity");
    h1->add_option("action", file_path, "Action file (with \"sub\" subgroup words)")
        ->required();
    h1->add_flag("--class-level", class_level,
                 "Compare restrictions up to cohomology classes");

    CLI::App* wreath = app.add_subcommand("wreath-test", "Wreath obstruction check");
    wreath->add_option("file", file_path, "Obstruction file")->required();

    CLI::App* sylow = app.add_subcommand("sylow-test", "Sylow obstruction check");
    sylow->add_option("file", file_path, "Sylow file")->required();

    CLI::App* sample = app.add_subcommand("sample", "Lifting-measure experiment");
    sample->add_option("experiment", file_path, "Experiment file")->required();

    CLI::App* formation = app.add_subcommand("formation", "Formation membership");
    formation->add_option("group", group_ref, "Group reference")->required();
    formation->add_option("--kind", formation_kind,
                          "all | p_group | solvable | composition_factors_in");
    formation->add_option("--p", formation_p, "Prime for p_group");
    formation->add_option("--factor", formation_factors,
                          "Allowed composition factors (group references)");

    CLI::App* validate = app.add_subcommand("validate", "Diagnose a DEP file");
    validate->add_option("dep", dep_path, "DEP file")->required();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    if (opts.threads < 1) opts.threads = 1;

    auto start = std::chrono::steady_clock::now();
    auto elapsed = [&]() {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    };

    try {
        std::string status = "ok";
        Json payload;

        if (solve->parsed()) {
            Json j = pp::read_json_file(dep_path);
            pp::require_format_version(j, dep_path);
            pp::DepFile file = pp::parse_dep(j, opts.cap);
            pp::require_valid(file.dep);
            std::vector<pp::WeakSolution> solutions;
            if (!prescribe_path.empty()) {
                pp::SubHom eta = parse_eta(prescribe_path, file);
                std::optional<pp::WeakSolution> sol =
                    via_fiber ? pp::lift_via_fiber(file.dep, eta, opts.cap)
                              : pp::solve_weak_prescribed(file.dep, eta);
                if (sol) solutions.push_back(std::move(*sol));
            } else {
                if (via_fiber)
                    throw pp::InvalidInput("--via-fiber requires --prescribe");
                solutions = pp::solve_weak(file.dep, want_all);
            }
            Json list = Json::array();
            for (const pp::WeakSolution& sol : solutions) {
                pp::verify_weak_solution(file.dep, sol);
                list.push_back(pp::solution_to_json(sol));
            }
            payload["solutions"] = std::move(list);
            if (solutions.empty()) status = "unsolvable";
        } else if (dominate->parsed()) {
            Json j = pp::read_json_file(dep_path);
            pp::require_format_version(j, dep_path);
            pp::DepFile file = pp::parse_dep(j, opts.cap);
            pp::require_valid(file.dep);
            Json tj = pp::read_json_file(theta_path);
            pp::require_format_version(tj, theta_path);
            pp::GroupHom theta =
                pp::parse_gen_images(tj, file.dep.L(), file.dep.H, theta_path);
            pp::SubHom eta = parse_eta(eta_path, file);
            pp::DominationWitness witness =
                pp::dominate_split(file.dep, theta, eta, opts.cap);
            payload["dominating"] = dep_to_json(witness.dominating);
            payload["pi_higher"] = pp::hom_to_json(witness.pi_higher);
            payload["pi_quot"] = pp::hom_to_json(witness.pi_quot);
            payload["alpha_section"] = pp::subhom_to_json(witness.sections.alpha_section);
            payload["beta_section"] = pp::hom_to_json(witness.sections.beta_section);
            pp::WeakSolution canonical = pp::canonical_dominating_solution(witness);
            pp::verify_weak_solution(witness.dominating, canonical);
            payload["canonical_solution"] = pp::solution_to_json(canonical);
        } else if (split->parsed() || complement->parsed()) {
            Json j = pp::read_json_file(file_path);
            pp::require_format_version(j, file_path);
            pp::FinitePair pair = pp::parse_pair(j, opts.cap);
            pp::Subgroup n_sub =
                (split->parsed() && j.contains("N"))
                    ? pp::subgroup_closure(pair.ambient,
                                           pp::eval_words(*pair.ambient, j["N"],
                                                          "pair.N"))
                    : pp::trivial_subgroup(pair.ambient);
            std::optional<pp::Subgroup> m = pp::split_over_subgroup(pair, n_sub);
            if (m) {
                payload["M"] = pp::subgroup_to_json(*m);
            } else {
                payload["M"] = "none";
                status = "unsolvable";
            }
        } else if (h1->parsed()) {
            Json j = pp::read_json_file(file_path);
            pp::require_format_version(j, file_path);
            pp::ActionFile file = pp::parse_action(j, opts.cap);
            pp::Subgroup sub =
                file.sub ? *file.sub : pp::whole_subgroup(file.action.actor);
            pp::RestrictionReport report =
                pp::restriction_surjective(file.action, sub, class_level);
            payload["surjective"] = report.surjective;
            payload["actor_cocycles"] = report.actor_cocycles;
            payload["sub_cocycles"] = report.sub_cocycles;
            payload["unextendable"] =
                report.unextendable ? Json(report.unextendable->values) : Json();
        } else if (wreath->parsed()) {
            // {"pair": {...}, "A": ref, "eta": {gen_images in A per
            //  distinguished word}, "G": ref, "nu": {gen_images in G}}
            Json j = pp::read_json_file(file_path);
            pp::require_format_version(j, file_path);
            const Json& pair_j = j.at("pair");
            pp::FinitePair pair = pp::parse_pair(pair_j, opts.cap);
            std::vector<pp::Elem> dist_gens = pp::eval_words(
                *pair.ambient, pair_j.at("distinguished"), "pair.distinguished");
            pp::GroupPtr a_grp = pp::load_group_ref(j.at("A"), opts.cap);
            pp::GroupPtr g_grp = pp::load_group_ref(j.at("G"), opts.cap);

            std::vector<pp::Elem> eta_imgs =
                j.at("eta").at("gen_images").get<std::vector<pp::Elem>>();
            if (eta_imgs.size() != dist_gens.size())
                throw pp::InvalidInput("eta: expected one image per distinguished "
                                       "generator");
            pp::EmbeddedGroup eg = pp::subgroup_as_group(pair.distinguished);
            std::vector<pp::Elem> local_of(std::size_t(pair.ambient->order), -1);
            for (pp::Elem i = 0; i < eg.group->order; ++i)
                local_of[std::size_t(eg.inclusion(i))] = i;
            std::vector<std::pair<pp::Elem, pp::Elem>> pins;
            for (std::size_t i = 0; i < eta_imgs.size(); ++i)
                pins.emplace_back(local_of[std::size_t(dist_gens[i])], eta_imgs[i]);
            pp::GroupHom local = pp::hom_from_pins(eg.group, a_grp, pins, "eta");
            std::vector<pp::Elem> map(std::size_t(pair.ambient->order), -1);
            for (pp::Elem i = 0; i < eg.group->order; ++i)
                map[std::size_t(eg.inclusion(i))] = local(i);
            pp::SubHom eta = pp::make_subhom(pair.distinguished, a_grp, std::move(map));

            pp::GroupHom nu =
                pp::parse_gen_images(j.at("nu"), pair.ambient, g_grp, "nu");
            pp::WreathObstruction obstruction =
                pp::wreath_obstruction_dep(pair, eta, nu, opts.cap);
            std::optional<pp::WeakSolution> sol =
                pp::solve_weak_prescribed(obstruction.dep, obstruction.prescribed_eta);
            payload["wreath_order"] = obstruction.wreath.group->order;
            payload["obstructed"] = !sol.has_value();
            if (sol) {
                pp::verify_weak_solution(obstruction.dep, *sol);
                payload["solution"] = pp::solution_to_json(*sol);
            }
        } else if (sylow->parsed()) {
            // {"group": ref, "p": int, "psi": optional {"target": ref,
            //  "gen_images": [...]}; default identity}
            Json j = pp::read_json_file(file_path);
            pp::require_format_version(j, file_path);
            pp::GroupPtr q = pp::load_group_ref(j.at("group"), opts.cap);
            int p = j.at("p").get<int>();
            pp::GroupHom psi =
                j.contains("psi")
                    ? pp::parse_gen_images(
                          j["psi"], q,
                          pp::load_group_ref(j["psi"].at("target"), opts.cap), "psi")
                    : pp::identity_hom(q);
            payload["obstructed"] = pp::sylow_obstruction_check(q, p, psi);
        } else if (sample->parsed()) {
            Json j = pp::read_json_file(file_path);
            pp::require_format_version(j, file_path);
            pp::ExperimentSpec spec = pp::parse_experiment(j, opts.cap);
            pp::ExperimentReport report = pp::run_experiment(spec, opts.threads);
            payload = pp::report_to_json(report);
            payload["seed"] = spec.seed;
            payload["trials"] = spec.trials;
        } else if (formation->parsed()) {
            pp::GroupPtr g = pp::load_group_ref(Json(group_ref), opts.cap);
            pp::FormationSpec spec;
            if (formation_kind == "all") {
                spec = pp::FormationSpec::all();
            } else if (formation_kind == "p_group") {
                spec = pp::FormationSpec::p_group(formation_p);
            } else if (formation_kind == "solvable") {
                spec = pp::FormationSpec::solvable();
            } else if (formation_kind == "composition_factors_in") {
                std::vector<pp::GroupPtr> factors;
                for (const std::string& ref : formation_factors)
                    factors.push_back(pp::load_group_ref(Json(ref), opts.cap));
                spec = pp::FormationSpec::composition_factors_in(std::move(factors));
            } else {
                throw pp::InvalidInput("unknown formation kind: " + formation_kind);
            }
            payload["member"] = pp::formation_member(g, spec);
            payload["kind"] = formation_kind;
        } else if (validate->parsed()) {
            Json j = pp::read_json_file(dep_path);
            pp::require_format_version(j, dep_path);
            pp::DepFile file = pp::parse_dep(j, opts.cap);
            std::vector<std::string> diagnostics = pp::validate_dep(file.dep);
            payload["valid"] = diagnostics.empty();
            payload["diagnostics"] = diagnostics;
        }

        return emit(status, std::move(payload), elapsed(), opts);
    } catch (const pp::CapExceeded& e) {
        return emit("cap_exceeded", Json{{"error", e.what()}}, elapsed(), opts);
    } catch (const pp::InvalidInput& e) {
        return emit("invalid_input", Json{{"error", e.what()}}, elapsed(), opts);
    } catch (const Json::exception& e) {
        return emit("invalid_input", Json{{"error", e.what()}}, elapsed(), opts);
    }
}
