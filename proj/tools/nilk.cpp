// nilk: reproduce the two constructions, run the full report, check witnesses.
//
// exit codes: 0 all checks pass, 1 a check failed, 2 bad input or I/O error

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilk/nilk.hpp"

namespace fs = std::filesystem;
using namespace nilk;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string dump(const json &j) { return j.dump(2) + "\n"; }

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out.flush())
        throw IoError("write to " + path.string() + " failed");
}

json read_json(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError(path + ": " + e.what());
    }
}

/// "-" writes to stdout.
void emit(const std::string &out, const std::string &text) {
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
}

template <Coefficient C>
std::string render(const Matrix<C> &m, const std::string &format) {
    return format == "latex" ? to_latex(m) : dump(to_json(m));
}

/// Calls f(std::type_identity<C>{}) for the coefficient ring named in descriptor.
template <class F>
int dispatch(std::string_view descriptor, F &&f) {
    auto name = coefficient_name_of(descriptor);
    if (name == coeff_traits<Rational>::name)
        return f(std::type_identity<Rational>{});
    if (name == coeff_traits<Integer>::name)
        return f(std::type_identity<Integer>{});
    if (name == coeff_traits<GaussianInt>::name)
        return f(std::type_identity<GaussianInt>{});
    if (name == coeff_traits<GroupRingZ4>::name)
        return f(std::type_identity<GroupRingZ4>{});
    if (name == coeff_traits<DualF2>::name)
        return f(std::type_identity<DualF2>{});
    return f(std::type_identity<F2>{});
}

std::string ring_of(const json &j) {
    if (!j.is_object() || !j.contains("ring") || !j.at("ring").is_string())
        throw ParseError("missing \"ring\"");
    return j.at("ring").get<std::string>();
}

int finish(const VerificationReport &rep, bool allow_discrepancies, bool as_json) {
    std::cout << (as_json ? dump(rep.to_json()) : rep.to_text());
    return rep.passed(allow_discrepancies) ? kOk : kCheckFailed;
}

int cmd_theorem3(const std::string &format, const std::string &out_dir, bool as_json) {
    VerificationReport rep = laurent_report();
    const auto R = laurent::laurent_representative();
    const auto N = higman_companion(decompose_by_degree(R, "s"));
    const std::string ext = format == "latex" ? ".tex" : ".json";
    const fs::path dir(out_dir);
    write_file(dir / ("theorem31_matrix" + ext), render(R, format));
    write_file(dir / ("N10" + ext), render(N, format));
    write_file(dir / "theorem3_report.json", dump(rep.to_json()));
    return finish(rep, true, as_json);
}

int cmd_theorem4(const std::string &format, const std::string &out_dir, bool as_json) {
    VerificationReport rep = groupring_report();
    const auto yz = groupring::yz_matrix();
    const auto lift = groupring::lift_to_group_ring(yz);
    const std::string ext = format == "latex" ? ".tex" : ".json";
    const fs::path dir(out_dir);
    write_file(dir / ("theorem42_matrix" + ext), render(lift, format));
    write_file(dir / ("yz_matrix" + ext), render(yz.matrix(), format));
    write_file(dir / "theorem4_report.json", dump(rep.to_json()));
    return finish(rep, true, as_json);
}

template <Coefficient C>
void report_nilpotency(const Matrix<C> &m, std::ostream &log) {
    auto idx = m.nilpotency_index(static_cast<unsigned>(m.rows()));
    if (!idx)
        throw NotNilpotent(m.shape() + " result");
    log << m.shape() << ", nilpotent of index " << *idx << "\n";
}

int cmd_higman(const std::string &input, const std::string &var, const std::string &out) {
    json j = read_json(input);
    return dispatch(ring_of(j), [&]<class C>(std::type_identity<C>) {
        auto rep = matrix_from_json<C>(j);
        std::vector<Matrix<C>> blocks;
        try {
            blocks = decompose_by_degree(rep, var);
        } catch (const std::invalid_argument &e) {
            throw VerificationFailure(e.what());
        }
        if (blocks.empty()) {
            std::cerr << "I - rep = 0: no blocks, nothing to companion\n";
            return kCheckFailed;
        }
        auto N = higman_companion(blocks);
        emit(out, dump(to_json(N)));
        std::cerr << blocks.size() << " blocks of size " << rep.rows() << "; ";
        report_nilpotency(N, std::cerr);
        return kOk;
    });
}

template <Coefficient C>
Matrix<C> read_nilpotent(const json &j) {
    auto N = matrix_from_json<C>(j);
    if (!N.is_square())
        throw DimensionMismatch("input is " + N.shape());
    if (!N.nilpotency_index(static_cast<unsigned>(N.rows())))
        throw NotNilpotent("input " + N.shape());
    return N;
}

int cmd_versch(const std::string &input, std::size_t k, const std::string &out) {
    json j = read_json(input);
    return dispatch(ring_of(j), [&]<class C>(std::type_identity<C>) {
        auto V = verschiebung(read_nilpotent<C>(j), k);
        emit(out, dump(to_json(V)));
        report_nilpotency(V, std::cerr);
        return kOk;
    });
}

int cmd_frob(const std::string &input, unsigned k, const std::string &out) {
    json j = read_json(input);
    return dispatch(ring_of(j), [&]<class C>(std::type_identity<C>) {
        auto F = frobenius(read_nilpotent<C>(j), k);
        emit(out, dump(to_json(F)));
        if (F.is_zero())
            std::cerr << F.shape() << ", zero\n";
        else
            report_nilpotency(F, std::cerr);
        return kOk;
    });
}

// chain: {"ring": R, "steps": [{"matrix": M0, "U": U0, "V": V0}, ..., {"matrix": Ml}]}
// SE:    {"ring": R (optional), "A": .., "B": .., "U": .., "V": .., "lag": l}
int cmd_sse_verify(const std::string &input) {
    json j = read_json(input);
    if (!j.is_object())
        throw ParseError("witness file must be an object");
    if (j.contains("steps")) {
        return dispatch(ring_of(j), [&]<class C>(std::type_identity<C>) {
            auto ring = parse_ring_descriptor<C>(ring_of(j));
            const auto &steps = j.at("steps");
            if (!steps.is_array() || steps.empty())
                throw ParseError("\"steps\" must be a non-empty array");
            SSEChain<C> chain;
            for (std::size_t k = 0; k < steps.size(); ++k) {
                chain.matrices.push_back(matrix_from_json<C>(steps[k].at("matrix"), ring));
                if (k + 1 < steps.size())
                    chain.witnesses.push_back(
                        {matrix_from_json<C>(steps[k].at("U"), ring), matrix_from_json<C>(steps[k].at("V"), ring)});
            }
            auto r = verify_sse_chain(chain);
            if (!r) {
                std::cout << "rejected: link " << *r.link << ": " << r.failure << " fails\n";
                return kCheckFailed;
            }
            std::cout << "accepted: chain of " << chain.witnesses.size() << " elementary steps\n";
            return kOk;
        });
    }
    const std::string descriptor = j.contains("ring") ? ring_of(j) : ring_of(j.at("A"));
    return dispatch(descriptor, [&]<class C>(std::type_identity<C>) {
        auto ring = parse_ring_descriptor<C>(descriptor);
        auto lag = j.at("lag").get<long long>();
        if (lag < 1)
            throw ParseError("lag must be positive");
        SEWitness<C> w{matrix_from_json<C>(j.at("U"), ring), matrix_from_json<C>(j.at("V"), ring),
                       static_cast<unsigned>(lag)};
        auto r = verify_se(matrix_from_json<C>(j.at("A"), ring), matrix_from_json<C>(j.at("B"), ring), w);
        if (!r) {
            std::cout << "rejected: " << r.failure << " fails\n";
            return kCheckFailed;
        }
        std::cout << "accepted: shift equivalence with lag " << lag << "\n";
        return kOk;
    });
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Explicit NK_1 / Nil_0 matrices and their exact verification"};
    app.require_subcommand(1);

    std::string format = "json", out_dir = ".", out, input, var = "s";
    std::size_t k = 2;
    bool allow_typos = false, as_json = false;
    VerifyOptions opts;

    auto *t3 = app.add_subcommand("theorem3", "Laurent construction: write the 2x2 representative and N10");
    auto *t4 = app.add_subcommand("theorem4", "group ring construction: write YZ and its lift");
    for (auto *sub : {t3, t4}) {
        sub->add_option("--emit", format, "output format")->check(CLI::IsMember({"json", "latex"}));
        sub->add_option("--out", out_dir, "output directory");
        sub->add_flag("--json", as_json, "print the report as JSON");
    }

    auto *hig = app.add_subcommand("higman", "companion of I - sum var^k M_k");
    hig->add_option("input", input, "matrix JSON")->required();
    hig->add_option("--var", var, "polynomial variable");
    hig->add_option("--out", out, "output file (default stdout)");

    auto *ver = app.add_subcommand("versch", "Verschiebung V_k of a nilpotent matrix");
    auto *fro = app.add_subcommand("frob", "Frobenius F_k of a nilpotent matrix");
    for (auto *sub : {ver, fro}) {
        sub->add_option("input", input, "matrix JSON")->required();
        sub->add_option("-k", k, "index")->check(CLI::PositiveNumber);
        sub->add_option("--out", out, "output file (default stdout)");
    }

    auto *sse = app.add_subcommand("sse-verify", "check an SSE chain or an SE witness");
    sse->add_option("input", input, "witness JSON")->required();

    auto *all = app.add_subcommand("verify-all", "run every check and print the report");
    all->add_flag("--allow-known-typos", allow_typos, "discrepancies with the published displays do not fail");
    all->add_flag("--json", as_json, "print the report as JSON");
    all->add_option("--seed", opts.seed, "seed for the randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (t3->parsed())
            return cmd_theorem3(format, out_dir, as_json);
        if (t4->parsed())
            return cmd_theorem4(format, out_dir, as_json);
        if (hig->parsed())
            return cmd_higman(input, var, out);
        if (ver->parsed())
            return cmd_versch(input, k, out);
        if (fro->parsed())
            return cmd_frob(input, static_cast<unsigned>(k), out);
        if (sse->parsed())
            return cmd_sse_verify(input);
        return finish(verify_all(opts), allow_typos, as_json);
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kBadInput;
    } catch (const json::exception &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kBadInput;
    } catch (const RingMismatch &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const DimensionMismatch &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception &e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    }
}
