#include "cli.hpp"

#include "suite.hpp"
#include "hopforbit/cbf.hpp"
#include "hopforbit/errors.hpp"

#include <omp.h>

#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

namespace hopforbit::cli {

namespace {

// ------------------------------------------------------------ input helpers

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get_or(const json& j, const char* key, T dflt) {
    if (!j.contains(key)) return dflt;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw SchemaError(std::string("field '") + key + "': " + e.what());
    }
}

template <class T>
T get(const json& j, const char* key) {
    try {
        return need(j, key).get<T>();
    } catch (const json::exception& e) {
        throw SchemaError(std::string("field '") + key + "': " + e.what());
    }
}

std::string scalar_text(const json& v) {
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    if (v.is_string()) return v.get<std::string>();
    throw SchemaError("scalars are integers or strings such as \"1/2\" or \"zeta^2+1\"");
}

std::vector<std::string> coord_texts(const json& v) {
    if (!v.is_array()) throw SchemaError("a point is an array of coordinates");
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(scalar_text(x));
    return out;
}

std::vector<Point> read_points(const PolyRing& R, const json& in) {
    std::vector<Point> pts;
    if (in.contains("point")) pts.push_back(suite::parse_point(R, coord_texts(in.at("point"))));
    if (in.contains("points")) {
        if (!in.at("points").is_array()) throw SchemaError("'points' must be an array");
        for (const auto& p : in.at("points")) pts.push_back(suite::parse_point(R, coord_texts(p)));
    }
    return pts;
}

FieldDescriptor read_field(const json& j) {
    if (!j.is_object()) throw SchemaError("'field' must be an object");
    return make_field(get_or<long>(j, "characteristic", 0), get_or<long>(j, "cyclotomic_order", 1));
}

GroupPresentation read_group(const json& j) {
    if (j.is_string()) {
        auto name = j.get<std::string>();
        if (name == "dihedral") return dihedral_group();
        if (name == "z_times_s3_by_c2") return z_times_s3_by_c2();
        throw SchemaError("unknown named group '" + name + "'");
    }
    GroupPresentation g;
    try {
        g.free_rank = get<int>(j, "free_rank");
        g.torsion = get_or<std::vector<long>>(j, "torsion", {});
        g.F_table = get<std::vector<std::vector<size_t>>>(j, "F_table");
        g.F_action = get<std::vector<std::vector<std::vector<long>>>>(j, "F_action");
        g.N_names = get_or<std::vector<std::string>>(j, "N_names", {});
        g.F_names = get_or<std::vector<std::string>>(j, "F_names", {});
    } catch (const json::exception& e) {
        throw SchemaError(std::string("group presentation: ") + e.what());
    }
    if (g.free_rank < 0) throw SchemaError("free_rank must be ≥ 0");
    return g;
}

// Order of q each family forces; used to validate an explicit q_order.
long forced_q_order(const FamilyParams& fp) {
    if (fp.family == "taft" || fp.family == "liu") return fp.n;
    if (fp.family == "quantum_plane") return fp.l;
    if (fp.family == "gz_b" && !fp.gz_p.empty() && fp.gz_p[0] > 0) {
        long P = 1;
        for (size_t i = 1; i < fp.gz_p.size(); ++i) P *= fp.gz_p[i];
        return fp.n / fp.gz_p[0] * P;
    }
    return 0;
}

FamilyParams read_family(const json& j) {
    FamilyParams fp;
    fp.family = get<std::string>(j, "family");
    fp.n = get_or<long>(j, "n", 0);
    fp.t = get_or<long>(j, "t", 0);
    fp.w = get_or<long>(j, "w", 0);
    fp.l = get_or<long>(j, "l", 0);
    fp.q_power = get_or<long>(j, "q_power", 1);
    fp.p = get_or<long>(j, "characteristic", get_or<long>(j, "p_char", 0));
    if (j.contains("p")) {
        if (j.at("p").is_array())
            fp.gz_p = get<std::vector<long>>(j, "p");
        else
            fp.p = get<long>(j, "p");
    }
    fp.multipliers = get_or<std::vector<long>>(j, "multipliers", {});
    if (j.contains("group")) fp.group = read_group(j.at("group"));
    if (fp.family == "restricted_sl2") fp.q_order = get_or<long>(j, "cyclotomic_order", 1);
    if (fp.family == "group") {
        if (!fp.group) throw SchemaError("family 'group' needs a 'group' field");
        fp.q_order = get_or<long>(j, "cyclotomic_order", 1);
        if (fp.multipliers.empty()) fp.multipliers.assign(fp.group->rank(), 1);
    } else if (j.contains("q_order")) {
        long want = forced_q_order(fp), got = get<long>(j, "q_order");
        long ord = want / std::gcd(want, fp.q_power);
        if (want > 0 && got != ord)
            throw BadParameters("q_order " + std::to_string(got) + " does not match the family (q has order " +
                                std::to_string(ord) + ")");
    }
    return fp;
}

bool has_family(const json& in) { return in.is_object() && in.contains("family"); }

FDHopf read_hopf_kind(const FieldDescriptor& f, const json& j) {
    auto kind = get<std::string>(j, "kind");
    if (kind == "taft") {
        auto n = get<size_t>(j, "n");
        Scalar q = j.contains("q") ? suite::parse_scalar(f, scalar_text(j.at("q")))
                                   : (n == 2 ? Scalar(f, -1L) : primitive_root(f, static_cast<long>(n)));
        return taft_fd(n, q);
    }
    if (kind == "cyclic") return group_algebra(f, cyclic_group_table(get<size_t>(j, "n")));
    if (kind == "symmetric") return group_algebra(f, symmetric_group_table(get<size_t>(j, "n")));
    if (kind == "group") return group_algebra(f, get<std::vector<std::vector<size_t>>>(j, "table"));
    if (kind == "dual_cyclic") return dual(group_algebra(f, cyclic_group_table(get<size_t>(j, "n"))));
    if (kind == "dual_group") return dual(group_algebra(f, get<std::vector<std::vector<size_t>>>(j, "table")));
    throw SchemaError("unknown hopf kind '" + kind + "'");
}

// An optional "antipode" matrix (rows of scalars) replaces the constructor's.
FDHopf read_hopf(const FieldDescriptor& f, const json& j) {
    FDHopf h = read_hopf_kind(f, j);
    if (!j.contains("antipode")) return h;
    const json& rows = j.at("antipode");
    if (!rows.is_array() || rows.size() != h.dim()) throw SchemaError("antipode needs dim T rows");
    Matrix s(f, h.dim(), h.dim());
    for (size_t r = 0; r < h.dim(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != h.dim()) throw SchemaError("antipode rows need dim T entries");
        for (size_t c = 0; c < h.dim(); ++c) s(r, c) = suite::parse_scalar(f, scalar_text(rows[r][c]));
    }
    return with_antipode(h, s);
}

int degree_bound_of(const Command& cmd, const json& in) {
    return cmd.degree_bound > 0 ? cmd.degree_bound : get_or<int>(in, "degree_bound", 0);
}

struct ActionInput {
    ActionSpec spec;
    std::optional<CleftPresentation> presentation;  // kept alive for adjoint actions
};

// Either an explicit action or the adjoint action of a family.
ActionInput read_action(const Command& cmd, const json& in) {
    int bound = degree_bound_of(cmd, in);
    if (has_family(in)) {
        auto p = make_family(read_family(in));
        auto side_name = get_or<std::string>(in, "side", "left");
        if (side_name != "left" && side_name != "right") throw SchemaError("side is 'left' or 'right'");
        ActionSpec spec = adjoint_action(p, side_name == "left" ? Side::left : Side::right);
        if (bound > 0) spec = spec.with_degree_bound(bound);
        return {spec, p};
    }
    FieldDescriptor f = read_field(need(in, "field"));
    FDHopf hopf = read_hopf(f, need(in, "hopf"));
    const json& rj = need(in, "ring");
    auto vars = get<std::vector<std::string>>(rj, "vars");
    auto laurent = get_or<std::vector<bool>>(rj, "laurent", std::vector<bool>(vars.size(), false));
    if (laurent.size() != vars.size()) throw SchemaError("'laurent' needs one flag per variable");
    PolyRing R(f, vars, laurent);
    std::vector<Poly> rels;
    for (const auto& s : get_or<std::vector<std::string>>(rj, "relations", {})) rels.push_back(parse_poly(R, s));
    AffineAlgebra A(Ideal(R, rels));
    auto rows = get<std::vector<std::vector<std::string>>>(in, "table");
    if (rows.size() != hopf.dim())
        throw SchemaError("table needs one row per basis element of T (" + std::to_string(hopf.dim()) + ")");
    std::vector<std::vector<Poly>> table;
    for (const auto& row : rows) {
        if (row.size() != R.nuser() && row.size() != R.nvars())
            throw SchemaError("each table row lists t·x for every variable (partners optional for grouplikes)");
        std::vector<Poly> r;
        for (const auto& s : row) r.push_back(parse_poly(R, s));
        table.push_back(std::move(r));
    }
    ActionSpec spec(hopf, A, table, bound);
    auto rep = verify_module_algebra(spec);
    if (!rep.pass) throw DomainError("not a module algebra: " + rep.failure + " " + rep.witness);
    return {spec, std::nullopt};
}

// ------------------------------------------------------------ serializers

json to_json(const Poly& p) { return p.to_string(); }

json to_json(const Ideal& I) {
    json a = json::array();
    for (const auto& g : I.display_basis()) a.push_back(g.to_string());
    return a;
}

json to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

json to_json(const Point& p) {
    json a = json::array();
    for (const auto& x : p.user_coords()) a.push_back(x.to_string());
    return a;
}

json to_json(const Matrix& m) {
    json a = json::array();
    for (size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

template <class T>
json sizes(const std::vector<T>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x);
    return a;
}

json orbit_json(const OrbitRecord& rec) {
    json j;
    j["core"] = to_json(rec.core);
    j["dimension"] = rec.dimension();
    j["quotient_basis"] = rec.quotient.labels();
    json mats = json::array();
    for (const auto& m : rec.action_matrices) mats.push_back(to_json(m));
    j["action_matrices"] = mats;
    json mem = json::array();
    for (const auto& p : rec.members) mem.push_back(to_json(p));
    j["members"] = mem;
    j["orbit_size"] = rec.members.size();
    j["frobenius"] = {{"frobenius", rec.frobenius.frobenius},
                      {"witness", to_json(rec.frobenius.witness)},
                      {"socle_dim", rec.frobenius.socle_dim},
                      {"semisimple_dim", rec.frobenius.semisimple_dim}};
    json stable = json::array();
    for (const auto& v : rec.t_simple.proper_stable_ideal) stable.push_back(to_json(v));
    j["t_simple"] = {{"t_simple", rec.t_simple.t_simple},
                     {"basis_closure_dims", sizes(rec.t_simple.basis_closure_dims)},
                     {"socle_closure_dims", sizes(rec.t_simple.socle_closure_dims)},
                     {"proper_stable_ideal", stable}};
    j["orbitally_semisimple"] = rec.semisimple;
    return j;
}

json simple_json(const Point& m, const SimpleDimsReport& r) {
    return {{"point", to_json(m)},
            {"core", to_json(r.core)},
            {"core_dim", r.core_dim},
            {"quotient_dim", r.quotient_dim},
            {"simple_dims", sizes(r.simple_dims)},
            {"annihilator_matched_dims", sizes(r.annihilator_matched_dims)},
            {"annihilator_dims", sizes(r.annihilator_dims)},
            {"chain_holds", r.chain_holds}};
}

json subgroup_json(const SubgroupRep& s) {
    return {{"description", s.description}, {"lattice", s.lattice}, {"F_part", s.f_part}};
}

json params_json(const CleftPresentation& p) {
    json j = json::object();
    for (const auto& [k, v] : p.data().params) j[k] = v;
    return j;
}

// ------------------------------------------------------------ subcommands

json cmd_family(const json& in, int& exit_code) {
    auto p = CleftPresentation::build(family_data(read_family(in)));
    auto rep = verify_presentation(p);
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    auto norm = check_normality(p);
    auto table = [](const std::vector<std::vector<Poly>>& t) {
        json a = json::array();
        for (const auto& row : t) {
            json r = json::array();
            for (const auto& x : row) r.push_back(to_json(x));
            a.push_back(r);
        }
        return a;
    };
    json j;
    j["name"] = p.name();
    j["params"] = params_json(p);
    j["field"] = p.field().name();
    j["ring"] = p.ring().describe();
    j["relations"] = to_json(p.A().ideal());
    j["dim_hbar"] = p.n();
    j["hbar_basis"] = p.data().labels;
    j["krull_dim"] = p.A().krull_dim();
    j["krull_dim_expected"] = p.data().krull_dim_expected;
    j["checks"] = checks;
    j["normality"] = {{"pass", norm.pass}, {"left", table(norm.left)}, {"right", table(norm.right)}};
    j["pass"] = rep.pass;
    if (!rep.pass) exit_code = 4;
    return j;
}

json cmd_core(const Command& cmd, const json& in) {
    auto ai = read_action(cmd, in);
    const PolyRing& R = ai.spec.ring();
    json out = json::array();
    std::vector<Ideal> ideals;
    if (in.contains("ideal")) {
        std::vector<Poly> g;
        for (const auto& s : get<std::vector<std::string>>(in, "ideal")) g.push_back(parse_poly(R, s));
        ideals.emplace_back(R, g);
    }
    for (const auto& p : read_points(R, in)) ideals.push_back(p.ideal());
    if (ideals.empty()) throw SchemaError("core needs 'ideal', 'point' or 'points'");
    for (const auto& I : ideals) {
        Ideal c = core(ai.spec, I);
        json j{{"ideal", to_json(I)}, {"core", to_json(c)}};
        if (auto st = finite_staircase(R, c.groebner())) j["dimension"] = st->size();
        out.push_back(j);
    }
    return {{"hopf", ai.spec.hopf().name()}, {"degree_bound", ai.spec.degree_bound()}, {"cores", out}};
}

json cmd_orbit(const Command& cmd, const json& in, int& exit_code) {
    auto ai = read_action(cmd, in);
    auto pts = read_points(ai.spec.ring(), in);
    if (pts.empty()) throw SchemaError("orbit needs 'point' or 'points'");
    json out = json::array();
    std::vector<json> slots(pts.size());
    std::vector<int> codes(pts.size(), 0);
    // per-point fan-out, assembled in input order
#pragma omp parallel for schedule(dynamic) if (cmd.jobs > 1)
    for (size_t i = 0; i < pts.size(); ++i) {
        try {
            slots[i] = orbit_json(orbit(ai.spec, pts[i]));
            slots[i]["point"] = to_json(pts[i]);
        } catch (const NonRationalPoint& e) {
            // the core never needs point enumeration
            json j{{"point", to_json(pts[i])}, {"error", e.what()}};
            try {
                j["core"] = to_json(core(ai.spec, pts[i].ideal()));
            } catch (const std::exception&) {
            }
            slots[i] = j;
            codes[i] = 3;
        } catch (const std::exception& e) {
            slots[i] = {{"point", to_json(pts[i])}, {"error", e.what()}};
            codes[i] = exit_code_for(e);
        }
    }
    for (size_t i = 0; i < pts.size(); ++i) {
        out.push_back(slots[i]);
        exit_code = std::max(exit_code, codes[i]);
    }
    return {{"hopf", ai.spec.hopf().name()}, {"degree_bound", ai.spec.degree_bound()}, {"orbits", out}};
}

json cmd_simples(const json& in) {
    auto p = make_family(read_family(in));
    auto pts = read_points(p.ring(), in);
    if (pts.empty()) throw SchemaError("simples needs 'point' or 'points'");
    auto pi = pi_degree_scan(p, pts);
    json out = json::array();
    for (size_t i = 0; i < pts.size(); ++i) out.push_back(simple_json(pts[i], pi.per_point[i]));
    json j{{"family", p.name()}, {"dim_hbar", p.n()}, {"points", out}, {"max_simple_dim", pi.max_simple_dim}};
    if (pi.gamma_order) {
        j["gamma_order"] = *pi.gamma_order;
        j["max_equals_gamma"] = pi.matches_gamma;
    }
    return j;
}

json cmd_chain(const json& in) {
    auto p = make_family(read_family(in));
    auto c = structure_chain_group_case(p);
    json inc = json::array();
    for (const auto& [name, strict] : c.inclusions) inc.push_back({{"inclusion", name}, {"strict", strict}});
    json j{{"family", p.name()},
           {"nilradical", to_json(c.NA)},
           {"P", to_json(c.P)},
           {"B", subgroup_json(c.B)},
           {"A", subgroup_json(c.A)},
           {"C", subgroup_json(c.C)},
           {"D", subgroup_json(c.D)},
           {"E", subgroup_json(c.E)},
           {"L", subgroup_json(c.L)},
           {"H", subgroup_json(c.H)},
           {"gamma_order", c.gamma_order},
           {"gamma", c.gamma},
           {"gamma_kernel", c.gamma_kernel},
           {"D_mod_L_rank", c.D_mod_L_rank},
           {"D_mod_L_domain", c.D_mod_L_domain},
           {"A_mod_P_central", c.A_mod_P_central},
           {"inclusions", inc},
           {"B_coinvariants_match", c.B_coinvariants_match},
           {"C_coinvariants_match", c.C_coinvariants_match}};
    auto pts = read_points(p.ring(), in);
    if (!pts.empty()) {
        json st = json::array();
        for (const auto& m : pts)
            st.push_back({{"point", to_json(m)}, {"stabilizer_order", gamma_stabilizer_order(p, c, m)}});
        j["stabilizers"] = st;
    }
    return j;
}

json cmd_verify(const Command& cmd, const json& in, int& exit_code) {
    suite::Options opt;
    opt.seed = cmd.seed;
    opt.only = get_or<std::vector<int>>(in, "criteria", {});
    json out = json::array();
    bool all = true;
    for (const auto& r : suite::run_all(opt)) {
        json j{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"cases", r.cases},
               {"failures", r.failures}, {"notes", r.notes}};
        if (cmd.timing) j["seconds"] = r.seconds;
        out.push_back(j);
        all = all && r.pass;
    }
    if (!all) exit_code = 4;
    return {{"seed", cmd.seed}, {"criteria", out}, {"pass", all}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string join_dims(const std::vector<size_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

// Random rational points: integer coordinates in [-r, r], Laurent ones nonzero.
std::vector<Point> sample_points(std::mt19937_64& rng, const PolyRing& R, int count, long r) {
    std::uniform_int_distribution<long> d(-r, r);
    std::vector<Point> pts;
    for (int k = 0; k < count; ++k) {
        Vec v;
        for (size_t i = 0; i < R.nuser(); ++i) {
            Scalar x(R.field(), d(rng));
            while (R.is_laurent(i) && x.is_zero()) x = Scalar(R.field(), d(rng));
            v.push_back(x);
        }
        pts.push_back(Point::from_user(R, v));
    }
    return pts;
}

std::string cmd_sweep(const Command& cmd, const json& in) {
    std::mt19937_64 rng(cmd.seed);
    int per_family = get_or<int>(in, "points_per_family", 5);
    long range = get_or<long>(in, "coordinate_range", 4);
    json fams = in.contains("families") ? in.at("families") : json::array({in});
    std::ostringstream csv;
    csv << "family,point,adjoint_core_dim,orbit_size,orbitally_semisimple,quotient_dim,simple_dims,"
           "annihilator_matched_dims,chain_holds,error\n";
    for (const auto& fj : fams) {
        auto p = make_family(read_family(fj));
        auto pts = read_points(p.ring(), fj);
        if (pts.empty()) pts = sample_points(rng, p.ring(), per_family, range);
        ActionSpec left = adjoint_action(p, Side::left);
        if (cmd.degree_bound > 0) left = left.with_degree_bound(cmd.degree_bound);
        std::vector<std::string> rows(pts.size());
#pragma omp parallel for schedule(dynamic) if (cmd.jobs > 1)
        for (size_t i = 0; i < pts.size(); ++i) {
            std::ostringstream row;
            row << csv_field(p.name()) << ',' << csv_field(pts[i].to_string()) << ',';
            try {
                auto rec = orbit(left, pts[i]);
                auto s = simple_dims_at(p, pts[i]);
                row << rec.dimension() << ',' << rec.members.size() << ',' << (rec.semisimple ? "true" : "false")
                    << ',' << s.quotient_dim << ',' << join_dims(s.simple_dims) << ','
                    << join_dims(s.annihilator_matched_dims) << ',' << (s.chain_holds ? "true" : "false") << ',';
            } catch (const std::exception& e) {
                row << ",,,,,,," << csv_field(e.what());
            }
            rows[i] = row.str();
        }
        for (const auto& r : rows) csv << r << '\n';
    }
    return csv.str();
}

const char* error_kind(const std::exception& e) {
    if (dynamic_cast<const SchemaError*>(&e)) return "schema";
    if (dynamic_cast<const DomainError*>(&e)) return "domain";
    if (dynamic_cast<const MathError*>(&e)) return "math";
    if (dynamic_cast<const CertificateFailure*>(&e)) return "certificate";
    if (dynamic_cast<const json::exception*>(&e)) return "schema";
    return "internal";
}

}  // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const SchemaError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
        dynamic_cast<const json::exception*>(&e))
        return 2;
    if (dynamic_cast<const MathError*>(&e)) return 3;
    return 4;
}

Outcome run(const Command& cmd, const std::string& input) {
    Outcome o;
    json report{{"tool", "hopforbit"}, {"version", version}, {"command", cmd.subcommand}};
    auto start = std::chrono::steady_clock::now();
    if (cmd.jobs > 0) omp_set_num_threads(cmd.jobs);
    set_parallel_kernels(cmd.jobs > 1);
    try {
        json in = input.empty() ? json::object() : json::parse(input);
        report["input"] = in;
        int code = 0;
        const auto& s = cmd.subcommand;
        if (s == "family")
            report["results"] = cmd_family(in, code);
        else if (s == "core")
            report["results"] = cmd_core(cmd, in);
        else if (s == "orbit")
            report["results"] = cmd_orbit(cmd, in, code);
        else if (s == "simples")
            report["results"] = cmd_simples(in);
        else if (s == "chain")
            report["results"] = cmd_chain(in);
        else if (s == "verify")
            report["results"] = cmd_verify(cmd, in, code);
        else if (s == "sweep") {
            o.output = cmd_sweep(cmd, in);
            return o;
        } else
            throw SchemaError("unknown subcommand '" + s + "'");
        o.exit_code = code;
        if (code != 0) o.error = "report contains failures (exit " + std::to_string(code) + ")";
    } catch (const std::exception& e) {
        o.exit_code = exit_code_for(e);
        o.error = e.what();
        report["error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
    }
    if (cmd.timing)
        report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    o.output = report.dump(2) + "\n";
    return o;
}

}  // namespace hopforbit::cli
