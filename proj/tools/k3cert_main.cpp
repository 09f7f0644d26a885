#include "k3cert/certificate_io.hpp"
#include "k3cert/dh.hpp"
#include "k3cert/embeddings.hpp"
#include "k3cert/planner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << payload;
    if (!os) throw std::runtime_error("cannot write output file " + out_path);
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction certificates for circle actions with 2k fixed points"};
    app.require_subcommand(1);

    // plan
    auto* plan_cmd = app.add_subcommand(
        "plan", "choose parameters for a given k, build the certificate, emit JSON");
    long long plan_k = 0;
    std::string parts_csv;
    long long plan_n = 0;
    std::string plan_out;
    plan_cmd->add_option("--k", plan_k, "total number of fixed-point pairs (k >= 5)")->required();
    plan_cmd->add_option("--parts", parts_csv, "comma-separated partition of k into parts in 5..9");
    auto* n_opt = plan_cmd->add_option("--N", plan_n, "even bound N > 2 k_j (k_j - 4)");
    plan_cmd->add_option("--out", plan_out, "output file (stdout when omitted)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a certificate file");
    std::string verify_path;
    std::string report_format;
    verify_cmd->add_option("certificate", verify_path, "certificate JSON file")->required();
    verify_cmd->add_option("--report", report_format, "report format: json or md")
        ->check(CLI::IsMember({"json", "md"}));

    // lattice roots
    auto* lattice_cmd = app.add_subcommand("lattice", "lattice-level constructions");
    lattice_cmd->require_subcommand(1);
    auto* roots_cmd = lattice_cmd->add_subcommand(
        "roots", "explicit vectors with prescribed pairings and their primitivity certificate");
    long long roots_k = 0, roots_a = 0, roots_b = 0;
    std::string roots_out;
    roots_cmd->add_option("--k", roots_k, "number of d_i vectors (0..9)")->required();
    roots_cmd->add_option("--A", roots_a, "(beta,beta), positive even")->required();
    roots_cmd->add_option("--B", roots_b, "(kappa_hat,kappa_hat), even")->required();
    roots_cmd->add_option("--out", roots_out, "output file (stdout when omitted)");

    // dh
    auto* dh_cmd = app.add_subcommand("dh", "Duistermaat-Heckman profile fixtures");
    dh_cmd->require_subcommand(1);
    auto* th2_cmd = dh_cmd->add_subcommand("theorem2", "the period-10 reference profile");
    std::string th2_out;
    th2_cmd->add_option("--out", th2_out, "output file (stdout when omitted)");
    auto* p61_cmd =
        dh_cmd->add_subcommand("prop61", "interval profile with k fixed points on each wall");
    long long p61_k = 0, p61_a = 0, p61_b = 0;
    std::string p61_width = "1/2";
    std::string p61_out;
    p61_cmd->add_option("--k", p61_k, "fixed points per wall (1..9)")->required();
    p61_cmd->add_option("--A", p61_a, "constant term, positive even")->required();
    p61_cmd->add_option("--B", p61_b, "quadratic coefficient, even, B > -k/2")->required();
    p61_cmd->add_option("--width", p61_width, "outer piece width in (0,1), default 1/2");
    p61_cmd->add_option("--out", p61_out, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*plan_cmd) {
            std::optional<std::vector<long long>> parts;
            if (!parts_csv.empty()) {
                std::vector<long long> ps;
                std::stringstream ss(parts_csv);
                std::string item;
                while (std::getline(ss, item, ',')) ps.push_back(std::stoll(item));
                parts = std::move(ps);
            }
            std::optional<long long> n;
            if (n_opt->count() > 0) n = plan_n;
            k3cert::ConstructionPlan plan = k3cert::make_plan(plan_k, parts, n);
            k3cert::ConstructionCertificate cert = k3cert::build_certificate(plan);
            write_output(k3cert::emit_certificate(cert), plan_out);
            return kExitPass;
        }
        if (*verify_cmd) {
            k3cert::ConstructionCertificate cert;
            try {
                cert = k3cert::parse_certificate(read_file(verify_path));
            } catch (const k3cert::CertificateError& e) {
                std::cerr << "invalid certificate: " << e.what() << "\n";
                return kExitInvalid;
            }
            k3cert::VerificationReport rep = k3cert::verify_certificate(cert);
            if (report_format == "json")
                std::cout << k3cert::report_to_json(rep);
            else if (report_format == "md")
                std::cout << k3cert::report_to_markdown(rep);
            else
                std::cout << k3cert::report_to_text(rep);
            return rep.pass() ? kExitPass : kExitFail;
        }
        if (*roots_cmd) {
            k3cert::RootsData rd = k3cert::roots_construct(static_cast<int>(roots_k),
                                                           k3cert::make_int(roots_a), k3cert::make_int(roots_b));
            auto primal = rd.primal_vectors();
            auto dual = rd.dual_vectors();
            k3cert::PrimitivityCertificate prim =
                k3cert::is_primitive_span(k3cert::k3_lattice(), primal, &dual);
            write_output(k3cert::emit_roots(rd, prim), roots_out);
            return kExitPass;
        }
        if (*th2_cmd) {
            write_output(k3cert::emit_profile(k3cert::theorem2_profile()), th2_out);
            return kExitPass;
        }
        if (*p61_cmd) {
            k3cert::DHProfile p =
                k3cert::prop61_profile(static_cast<int>(p61_k), k3cert::make_int(p61_a),
                                       k3cert::make_int(p61_b), k3cert::Rat::parse(p61_width));
            write_output(k3cert::emit_profile(p), p61_out);
            return kExitPass;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
