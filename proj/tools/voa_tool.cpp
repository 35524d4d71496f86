// Command-line surface: build the stock truncated VOAs, verify axioms, and
// run the center / block / radical / classification analyses over .voa files.
//
// Exit codes: 0 all checks pass, 1 axiom failure or violated structural
// identity, 2 input error, 3 inconclusive-only outcomes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "voa/axioms.hpp"
#include "voa/builders.hpp"
#include "voa/classify.hpp"
#include "voa/format.hpp"
#include "voa/radicals.hpp"
#include "voa/v0_power_assoc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;

std::string dims_str(const std::vector<int>& dims) {
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s + "]";
}

voa::TruncatedVOA read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw voa::input_error("cannot open input file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return voa::parse_voa(text);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw voa::input_error("cannot open output file: " + path);
    out << text;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

int run_check(const voa::TruncatedVOA& V, bool machine) {
    voa::AxiomReport rep = voa::verify_axioms(V);
    if (machine) {
        std::cout << "name=" << V.name << "\n"
                  << "axioms_ok=" << bool_str(rep.ok()) << "\n"
                  << "exact=" << rep.total_exact() << "\n"
                  << "skipped=" << rep.total_skipped() << "\n"
                  << "failed=" << rep.total_failed() << "\n";
        for (const auto& f : rep.failures) std::cout << "failure=" << f << "\n";
    } else {
        std::cout << V.name << ": dims " << dims_str(V.dims) << ", central charge "
                  << V.central_charge << "\n"
                  << rep.summary();
        std::cout << (rep.ok() ? "all exact checks pass" : "AXIOM FAILURES PRESENT")
                  << " (" << rep.total_exact() << " exact, " << rep.total_skipped()
                  << " skipped)\n";
    }
    return rep.ok() ? kExitOk : kExitViolation;
}

int run_center(const voa::TruncatedVOA& V, bool machine) {
    voa::CenterSubalgebra Z = voa::center(V);
    auto idems = voa::primitive_idempotents_of_center(Z);
    voa::Subspace jz = voa::nilradical_assoc(Z.algebra);
    bool is_local = Z.dim() - jz.dim() == 1;
    if (machine) {
        std::cout << "name=" << V.name << "\n"
                  << "center_dim=" << Z.dim() << "\n"
                  << "center_nilradical_dim=" << jz.dim() << "\n"
                  << "primitive_idempotents=" << idems.size() << "\n"
                  << "center_local=" << bool_str(is_local) << "\n";
    } else {
        std::cout << V.name << ": Z(V) has dimension " << Z.dim() << ", nilradical dimension "
                  << jz.dim() << ", " << idems.size() << " primitive idempotent(s); Z(V) is "
                  << (is_local ? "local" : "not local") << "\n";
    }
    return kExitOk;
}

int run_blocks(const voa::TruncatedVOA& V, bool machine) {
    voa::BlockDecomposition dec = voa::block_decompose(V);
    if (machine) {
        std::cout << "name=" << V.name << "\n"
                  << "blocks=" << dec.blocks.size() << "\n";
        for (std::size_t i = 0; i < dec.blocks.size(); ++i)
            std::cout << "block" << i << "_dims=" << dims_str(dec.blocks[i].dims) << "\n";
    } else {
        std::cout << V.name << ": " << dec.blocks.size() << " block(s)\n";
        for (std::size_t i = 0; i < dec.blocks.size(); ++i)
            std::cout << "  block " << i << ": dims " << dims_str(dec.blocks[i].dims)
                      << ", vacuum idempotent " << voa::gv_str(dec.idempotents[i]) << "\n";
    }
    return kExitOk;
}

int run_radicals(const voa::TruncatedVOA& V, bool machine, const voa::SearchParams& params) {
    voa::WindowIdeal T = voa::trivial_radical(V);
    voa::RadicalLowerBound lb = voa::radical_lower_bound_of(V, params);
    voa::CenterRadicalReport cr = voa::check_center_radical_identity(V);
    voa::NilpotencyStatus lb_status = voa::nilpotency_status(V, lb.ideal);
    if (machine) {
        std::cout << "name=" << V.name << "\n"
                  << "trivial_radical_dims=" << dims_str(T.dims()) << "\n"
                  << "center_nilradical_dim=" << cr.jz_dim << "\n"
                  << "J_lower_bound_dims=" << dims_str(lb.ideal.dims()) << "\n"
                  << "J_lower_bound_exact=" << bool_str(lb.ideal.exact) << "\n"
                  << "J_lower_bound_status=" << lb_status.str() << "\n"
                  << "center_radical_identity=" << bool_str(cr.ok()) << "\n"
                  << "closure_status=" << cr.closure_status.str() << "\n"
                  << "seed=" << lb.seed << "\n";
        for (const auto& f : cr.failures) std::cout << "failure=" << f << "\n";
    } else {
        std::cout << V.name << ":\n"
                  << "  trivial radical dims " << dims_str(T.dims()) << "\n"
                  << "  J(Z(V)) dimension " << cr.jz_dim << " (nilpotency index "
                  << cr.jz_nilpotency_index << ")\n"
                  << "  radical lower bound dims " << dims_str(lb.ideal.dims())
                  << (lb.ideal.exact ? " [exact]" : " [window-relative]") << ", "
                  << lb_status.str() << "\n"
                  << "  center/radical identity: " << cr.summary() << "\n";
    }
    return cr.ok() ? kExitOk : kExitViolation;
}

int run_classify(const voa::TruncatedVOA& V, bool machine, const voa::SearchParams& params) {
    voa::ClassificationReport rep = voa::classify(V, params);
    if (machine) {
        std::cout << "name=" << V.name << "\n"
                  << "blocks=" << rep.block_count << "\n"
                  << "semilocal=" << bool_str(rep.semilocal) << "\n"
                  << "local=" << bool_str(rep.local) << "\n"
                  << "agreement=" << rep.agreement_str() << "\n"
                  << "equivalence_applicable=" << bool_str(rep.equivalence_applicable) << "\n"
                  << "seed=" << rep.seed << "\n"
                  << "samples=" << rep.samples << "\n";
        for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
            const auto& b = rep.blocks[i];
            std::cout << "block" << i << "_dims=" << dims_str(b.block.dims) << "\n"
                      << "block" << i << "_indecomposable=" << bool_str(b.indecomposable)
                      << "\n"
                      << "block" << i << "_center_local=" << bool_str(b.center_local) << "\n"
                      << "block" << i << "_v0plus=" << b.v0plus.str() << "\n"
                      << "block" << i << "_local_window=" << bool_str(b.local_within_window)
                      << "\n"
                      << "block" << i << "_jlb_dims=" << dims_str(b.j_lb.ideal.dims()) << "\n"
                      << "block" << i << "_quotient_dims=" << dims_str(b.quotient_dims)
                      << "\n";
        }
        for (const auto& c : rep.caveats) std::cout << "caveat=" << c << "\n";
    } else {
        std::cout << V.name << ": " << rep.block_count << " block(s), "
                  << (rep.semilocal ? "semilocal" : "not semilocal") << ", the input itself is "
                  << (rep.local ? "local" : "not local") << " (agreement: " << rep.agreement_str()
                  << ")\n";
        for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
            const auto& b = rep.blocks[i];
            std::cout << "  block " << i << ": dims " << dims_str(b.block.dims)
                      << " | indecomposable=" << bool_str(b.indecomposable)
                      << " center_local=" << bool_str(b.center_local)
                      << " v0plus=" << b.v0plus.str()
                      << " local_window=" << bool_str(b.local_within_window) << " J_lb dims "
                      << dims_str(b.j_lb.ideal.dims()) << "\n";
        }
        for (const auto& c : rep.caveats) std::cout << "  caveat: " << c << "\n";
    }
    if (rep.agreement == voa::ClassificationReport::Agreement::Violation)
        return kExitViolation;
    if (rep.agreement == voa::ClassificationReport::Agreement::InconclusiveCaveat)
        return kExitInconclusive;
    return kExitOk;
}

voa::TruncatedVOA build_by_name(const std::string& which, int level,
                                const voa::Rational& charge, const std::string& preset) {
    if (which == "heisenberg") return voa::build_heisenberg(level);
    if (which == "virasoro") return voa::build_virasoro(charge, level);
    if (which == "virasoro-simple") return voa::build_virasoro_simple(charge, level);
    if (which == "lattice") return voa::build_lattice_upper(level);
    if (which == "semidirect") {
        voa::TruncatedVOA h = voa::build_heisenberg(level);
        return voa::build_semidirect(h, voa::adjoint_module(h),
                                     "semidirect_m1_n" + std::to_string(level));
    }
    if (which == "direct-sum") {
        voa::TruncatedVOA h = voa::build_heisenberg(level);
        return voa::build_direct_sum(h, h, "direct_sum_m1_m1_n" + std::to_string(level));
    }
    if (which == "commutative") {
        if (preset == "q") return voa::build_commutative_voa(voa::algebra_q(), "commutative_q");
        if (preset == "qxq")
            return voa::build_commutative_voa(voa::algebra_q_x_q(), "commutative_qxq");
        if (preset == "qx2")
            return voa::build_commutative_voa(voa::algebra_dual_numbers(), "commutative_qx2");
        if (preset == "qxq2")
            return voa::build_commutative_voa(voa::algebra_split_idempotent(),
                                              "commutative_qxq2");
        if (preset == "qu3")
            return voa::build_commutative_voa(voa::algebra_u3_u2(), "commutative_qu3");
        throw voa::input_error("unknown commutative preset '" + preset +
                               "' (expected q, qxq, qx2, qxq2, qu3)");
    }
    throw voa::input_error("unknown builder '" + which + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure analysis of weight-truncated vertex operator algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool machine = false;
    std::uint64_t seed = 1;
    int samples = 32;
    app.add_flag("--machine", machine, "emit line-oriented key=value records");
    app.add_option("--seed", seed, "seed for all sampled searches");
    app.add_option("--samples", samples, "sample count for all sampled searches");

    std::string in_path, out_path;
    std::string build_name, preset = "q";
    int level = 2;
    std::string charge_text = "1/2";

    auto* build = app.add_subcommand("build", "construct a stock VOA and write it as .voa");
    build->add_option("builder", build_name,
                      "heisenberg | virasoro | virasoro-simple | lattice | semidirect | "
                      "direct-sum | commutative")
        ->required();
    build->add_option("--level", level, "truncation level N");
    build->add_option("--charge", charge_text, "central charge p/q (virasoro builders)");
    build->add_option("--preset", preset, "commutative algebra preset");
    build->add_option("-o,--output", out_path, "output file (default stdout)");

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", in_path, ".voa file (default stdin)");
    };
    auto* check = app.add_subcommand("check", "verify the axiom checks");
    add_input(check);
    auto* centerc = app.add_subcommand("center", "compute Z(V) and its idempotents");
    add_input(centerc);
    auto* blocksc = app.add_subcommand("blocks", "compute the block decomposition");
    add_input(blocksc);
    auto* radicalsc =
        app.add_subcommand("radicals", "trivial radical, J(Z), lower bound, identity checks");
    add_input(radicalsc);
    auto* classifyc = app.add_subcommand("classify", "block-by-block locality classification");
    add_input(classifyc);

    CLI11_PARSE(app, argc, argv);

    voa::SearchParams params{seed, samples};
    try {
        if (build->parsed()) {
            voa::TruncatedVOA V =
                build_by_name(build_name, level, voa::Rational::parse(charge_text), preset);
            write_output(out_path, voa::serialize_voa(V));
            return kExitOk;
        }
        voa::TruncatedVOA V = read_input(in_path);
        if (check->parsed()) return run_check(V, machine);
        if (centerc->parsed()) return run_center(V, machine);
        if (blocksc->parsed()) return run_blocks(V, machine);
        if (radicalsc->parsed()) return run_radicals(V, machine, params);
        if (classifyc->parsed()) return run_classify(V, machine, params);
    } catch (const voa::unsplittable_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const voa::integrity_error& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const voa::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
