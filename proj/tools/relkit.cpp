// Command-line surface: matrix I/O, decomposition reports, and the seeded
// randomized verification suite. All reports are JSON on stdout.
//
// Exit codes: 0 success, 2 decomposition condition failure, 3 parse/IO
// failure, 4 dimension mismatch, 5 not a contraction, 1 anything else.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "relkit/complementation.hpp"
#include "relkit/lebesgue.hpp"
#include "relkit/matrix_io.hpp"
#include "relkit/operator_pairs.hpp"
#include "relkit/verify.hpp"

namespace {

using relkit::Json;
using relkit::Matrix;

constexpr int kExitOk = 0;
constexpr int kExitCondition = 2;
constexpr int kExitParse = 3;
constexpr int kExitDimension = 4;
constexpr int kExitContraction = 5;

relkit::Tolerances tolerances_from_env() {
    relkit::Tolerances tol;
    if (const char* raw = std::getenv("RELKIT_TOLERANCE")) {
        try {
            tol.member = std::stod(raw);
        } catch (const std::exception&) {
            throw relkit::ParseError("RELKIT_TOLERANCE is not a number");
        }
        tol.validate();
    }
    return tol;
}

Json relation_summary(const relkit::LinearRelation& t, const relkit::Tolerances& tol) {
    relkit::RelationParts p = relkit::parts(t, tol);
    return Json{{"graph", relkit::subspace_to_json(t.graph())},
                {"dim", t.dim()},
                {"dom_dim", p.dom.dim()},
                {"ran_dim", p.ran.dim()},
                {"ker_dim", p.ker.dim()},
                {"mul_dim", p.mul.dim()}};
}

Json flags_json(const relkit::Decomposition& d) {
    return Json{{"strict", d.strict},
                {"pseudo_orthogonal", d.pseudo_orthogonal},
                {"lebesgue_type", d.lebesgue_type},
                {"orthogonal", d.orthogonal}};
}

Json split_json(const relkit::SplitCertificate& c) {
    return Json{{"sum_gap", c.sum_gap},
                {"equality", c.equality},
                {"direct", c.direct},
                {"mul_invariant", c.mul_invariant},
                {"mul_t", relkit::subspace_to_json(c.mul_t)},
                {"x_mul", relkit::subspace_to_json(c.x_mul)},
                {"y_mul", relkit::subspace_to_json(c.y_mul)}};
}

Json classify_json(const relkit::ClassifyCertificate& c) {
    return Json{{"closable_first", c.closable_first},
                {"singular_second", c.singular_second},
                {"criterion_closable", c.criterion_closable},
                {"criterion_singular", c.criterion_singular},
                {"criteria_agree", c.criteria_agree}};
}

int emit(const Json& report, bool condition_ok) {
    std::cout << report.dump(2) << '\n';
    return condition_ok ? kExitOk : kExitCondition;
}

int cmd_decompose_relation(const std::optional<std::string>& graph_file, long long dim_h,
                           const std::optional<std::string>& phi_file,
                           const std::optional<std::string>& psi_file,
                           const std::optional<std::string>& k_file) {
    relkit::Tolerances tol = tolerances_from_env();
    std::optional<relkit::LinearRelation> t;
    if (graph_file) {
        Matrix g = relkit::load_matrix(*graph_file);
        if (dim_h < 1 || dim_h >= g.rows())
            throw relkit::DimensionMismatch(
                "decompose-relation: --dim-h must split the graph rows");
        t = relkit::from_pairs(dim_h, g.rows() - dim_h, g, tol);
    } else {
        Matrix phi = relkit::load_matrix(*phi_file);
        Matrix psi = relkit::load_matrix(*psi_file);
        t = relkit::relation_of_pair(relkit::make_operator_pair(std::move(phi), std::move(psi)), tol);
    }

    Matrix k = k_file ? relkit::load_matrix(*k_file)
                      : relkit::parts(*t, tol).mul.projector();
    relkit::Decomposition d = relkit::classify(relkit::decompose(*t, k, tol), tol);

    Json report{{"kind", "decompose_relation"},
                {"dim_h", t->dim_h()},
                {"dim_k", t->dim_k()},
                {"k", relkit::matrix_to_json(d.k)},
                {"t", relation_summary(*t, tol)},
                {"t1", relation_summary(d.t1, tol)},
                {"t2", relation_summary(d.t2, tol)},
                {"flags", flags_json(d)},
                {"certificates",
                 Json{{"split", split_json(d.split)}, {"classify", classify_json(*d.classify_cert)}}}};

    if (d.pseudo_orthogonal) {
        relkit::RangeOverlap overlap = relkit::range_overlap(*t, k, tol);
        report["overlap"] = Json{{"direct", relkit::subspace_to_json(overlap.direct)},
                                 {"via_m", relkit::subspace_to_json(overlap.via_m)},
                                 {"gap", overlap.gap}};
    }
    return emit(report, d.pseudo_orthogonal && d.lebesgue_type);
}

int cmd_decompose_pair(const std::string& phi_file, const std::string& psi_file,
                       const std::optional<std::string>& k_file) {
    relkit::Tolerances tol = tolerances_from_env();
    relkit::OperatorPair p =
        relkit::make_operator_pair(relkit::load_matrix(phi_file), relkit::load_matrix(psi_file));

    relkit::PairDecomposition d;
    if (k_file) {
        d = relkit::pair_decompose(p, relkit::load_matrix(*k_file), tol);
    } else {
        d = relkit::lebesgue_pair(p, tol);
    }

    Json report{{"kind", "decompose_pair"},
                {"dim_e", p.dim_e()},
                {"dim_h", p.dim_h()},
                {"dim_k", p.dim_k()},
                {"k", relkit::matrix_to_json(d.k)},
                {"psi1", relkit::matrix_to_json(d.psi1)},
                {"psi2", relkit::matrix_to_json(d.psi2)},
                {"flags",
                 Json{{"regular_part", d.regular_part},
                      {"singular_part", d.singular_part},
                      {"pseudo_orthogonal", d.pseudo_orthogonal},
                      {"lebesgue_type", d.lebesgue_type}}},
                {"certificates",
                 Json{{"split_direct", d.split_direct},
                      {"singular_cross_check", d.singular_cross_check},
                      {"weak_b_prime", d.weak_b_prime}}}};

    if (relkit::orthonormalize(d.psi1, tol).dim() > 0) {
        relkit::OperatorPair regular = relkit::make_operator_pair(p.phi, d.psi1);
        if (relkit::is_regular(regular, tol))
            report["radon_nikodym"] = relkit::matrix_to_json(relkit::radon_nikodym(regular, tol));
    }
    return emit(report, d.pseudo_orthogonal && d.lebesgue_type);
}

int cmd_complement(const std::string& x_file) {
    relkit::Tolerances tol = tolerances_from_env();
    Matrix x = relkit::load_matrix(x_file);
    relkit::ContractionPair pair(x, tol);  // throws InvalidContraction on bad input

    relkit::KlemmaReport kl = relkit::klemma_report(pair);
    relkit::OverlapSpace overlap = relkit::overlap_space(pair);
    relkit::WModelReport w = relkit::w_model(pair);

    const relkit::Subspace& overlap_basis = overlap.space.range();
    Matrix gram(overlap_basis.dim(), overlap_basis.dim());
    for (relkit::Index i = 0; i < overlap_basis.dim(); ++i)
        for (relkit::Index j = 0; j < overlap_basis.dim(); ++j)
            gram(i, j) = relkit::overlap_inner(pair, overlap_basis.basis().col(i),
                                               overlap_basis.basis().col(j));

    relkit::Subspace ran_x = relkit::orthonormalize(pair.x(), tol);
    relkit::Subspace ran_y = relkit::orthonormalize(pair.y(), tol);
    Json report{{"kind", "complement"},
                {"dim", pair.dim()},
                {"x", relkit::matrix_to_json(pair.x())},
                {"y", relkit::matrix_to_json(pair.y())},
                {"subspaces",
                 Json{{"ran_x", relkit::subspace_to_json(ran_x)},
                      {"ker_x", relkit::subspace_to_json(relkit::orthogonal_complement(ran_x, tol))},
                      {"ran_y", relkit::subspace_to_json(ran_y)},
                      {"ker_y", relkit::subspace_to_json(relkit::orthogonal_complement(ran_y, tol))},
                      {"overlap", relkit::subspace_to_json(overlap_basis)}}},
                {"overlap_gram", relkit::matrix_to_json(gram)},
                {"identity_gaps",
                 Json{{"kernel", kl.kernel_gap},
                      {"range", kl.range_gap},
                      {"sqrt_range", kl.sqrt_gap},
                      {"closure", kl.closure_gap}}},
                {"w_model",
                 Json{{"isometry_residual", w.isometry_residual},
                      {"idempotent_residual", w.idempotent_residual},
                      {"hermitian_residual", w.hermitian_residual},
                      {"block_residual", w.block_residual},
                      {"kernel_gap", w.kernel_gap},
                      {"surjective", w.surjective}}}};
    return emit(report, kl.pass);
}

int cmd_verify(long long seed, int trials, int max_dim) {
    relkit::VerifyConfig config;
    config.seed = static_cast<std::uint64_t>(seed);
    config.trials = trials;
    config.max_dim = max_dim;
    config.tol = tolerances_from_env();
    relkit::VerifyReport report = relkit::run_verify(config);
    std::cout << relkit::verify_report_to_json(report).dump(2) << '\n';
    return report.all_passed ? kExitOk : kExitCondition;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relkit: decompositions of linear relations and operator pairs"};
    app.require_subcommand(1);

    auto* rel = app.add_subcommand("decompose-relation",
                                   "Decompose a relation given by a graph matrix or a pair");
    std::optional<std::string> rel_graph, rel_phi, rel_psi, rel_k;
    long long rel_dim_h = 0;
    rel->add_option("--graph", rel_graph, "columns span the graph inside H x K");
    rel->add_option("--dim-h", rel_dim_h, "rows of the H block in the graph file");
    rel->add_option("--phi", rel_phi, "matrix Phi of an operator pair");
    rel->add_option("--psi", rel_psi, "matrix Psi of an operator pair");
    rel->add_option("--k", rel_k, "contraction K (default: projection onto mul T)");

    auto* pair_cmd = app.add_subcommand("decompose-pair", "Decompose Psi with respect to Phi");
    std::string pair_phi, pair_psi;
    std::optional<std::string> pair_k;
    pair_cmd->add_option("--phi", pair_phi, "matrix Phi")->required();
    pair_cmd->add_option("--psi", pair_psi, "matrix Psi")->required();
    pair_cmd->add_option("--k", pair_k, "contraction K (default: canonical projection)");

    auto* comp = app.add_subcommand("complement", "Analyze the pair (X, I - X)");
    std::string comp_x;
    comp->add_option("--x", comp_x, "nonnegative contraction X")->required();

    auto* verify = app.add_subcommand("verify", "Run the randomized invariant suites");
    long long verify_seed = 42;
    int verify_trials = 100;
    int verify_max_dim = 8;
    verify->add_option("--seed", verify_seed, "base seed");
    verify->add_option("--trials", verify_trials, "trials per property")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-dim", verify_max_dim, "largest ambient dimension")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (rel->parsed()) {
            const bool has_graph = rel_graph.has_value();
            const bool has_pair = rel_phi.has_value() && rel_psi.has_value();
            if (has_graph == has_pair)
                throw relkit::ParseError(
                    "decompose-relation: give either --graph with --dim-h or --phi with --psi");
            return cmd_decompose_relation(rel_graph, rel_dim_h, rel_phi, rel_psi, rel_k);
        }
        if (pair_cmd->parsed()) return cmd_decompose_pair(pair_phi, pair_psi, pair_k);
        if (comp->parsed()) return cmd_complement(comp_x);
        if (verify->parsed()) return cmd_verify(verify_seed, verify_trials, verify_max_dim);
    } catch (const relkit::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const relkit::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDimension;
    } catch (const relkit::InvalidContraction& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitContraction;
    } catch (const relkit::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
