#include "isolation/serialize.hpp"

#include <json.hpp>

#include "isolation/graph6.hpp"

namespace isolation {

namespace {

using nlohmann::json;

json tri_state(const std::optional<bool>& value) {
    if (!value) return nullptr;
    return *value;
}

json claims_json(const std::optional<ClaimReport>& claims) {
    if (!claims) return nullptr;
    return json{{"sequence_independent", claims->sequence_independent},
                {"blocks_partition", claims->blocks_partition},
                {"boundary_bounded", claims->boundary_bounded},
                {"intermediate_bound", claims->intermediate_bound},
                {"boundary_size", claims->boundary_size},
                {"degree_weight", claims->degree_weight},
                {"iota_prime", claims->iota_prime}};
}

const char* kind_name(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::thm1: return "thm1";
        case CertificateKind::thm2: return "thm2";
        case CertificateKind::direct: return "direct";
    }
    return "direct";
}

}  // namespace

std::string certificate_json(const std::string& graph_id, int k, const Certificate& cert,
                             const std::optional<ClaimReport>& claims) {
    json j;
    j["graph"] = graph_id;
    j["k"] = k;
    j["kind"] = kind_name(cert.kind);
    j["set"] = cert.set.vertices();
    j["source_set"] = cert.source_set.vertices();
    j["bound_applicable"] = cert.bound_applicable;
    if (cert.bound_applicable) {
        j["bound_num"] = cert.bound.num();
        j["bound_den"] = cert.bound.den();
    } else {
        j["bound_num"] = nullptr;
        j["bound_den"] = nullptr;
    }
    j["ell"] = cert.trace ? json(cert.trace->ell()) : json(nullptr);
    j["r"] = cert.kind == CertificateKind::thm2 ? json(cert.r) : json(nullptr);
    j["b_policy"] = cert.b_exact ? "exact" : "greedy";
    j["checks"] = {{"independent", cert.independent_ok},
                   {"isolating", cert.isolating_ok},
                   {"within_bound", cert.within_bound_ok}};
    j["valid"] = cert.valid();
    j["claims"] = claims_json(claims);
    return j.dump();
}

std::string bound_report_json(const BoundReport& report, bool include_timing) {
    json j;
    j["graph"] = report.graph6;
    j["n"] = report.n;
    j["max_degree"] = report.max_degree;
    j["k"] = report.k;
    j["iota"] = report.iota;
    j["iota_prime"] = report.iota_prime;
    j["ell"] = report.ell ? json(*report.ell) : json(nullptr);
    if (report.thm1) {
        j["thm1_bound_num"] = report.thm1->num();
        j["thm1_bound_den"] = report.thm1->den();
    } else {
        j["thm1_bound_num"] = nullptr;
        j["thm1_bound_den"] = nullptr;
    }
    j["cor1_bound"] = report.cor1;
    j["r_min"] = report.r_min;
    j["thm2_bound"] = report.thm2 ? json(*report.thm2) : json(nullptr);
    j["claims"] = claims_json(report.claims);
    j["checks"] = {{"iota_le_iota_prime", tri_state(report.chk_iota_le_prime)},
                   {"k_monotonicity", tri_state(report.chk_monotone)},
                   {"thm1_bound", tri_state(report.chk_thm1)},
                   {"cor1_ratio", tri_state(report.chk_cor1)},
                   {"thm2_bound", tri_state(report.chk_thm2)},
                   {"claims", tri_state(report.chk_claims)},
                   {"thm1_certificate", tri_state(report.chk_cert_thm1)},
                   {"thm2_certificate", tri_state(report.chk_cert_thm2)},
                   {"independent_domination_identity", tri_state(report.chk_i_identity)}};
    j["ok"] = report.ok;
    j["first_failure"] = report.ok ? json(nullptr) : json(report.first_failure);
    if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
    return j.dump();
}

std::string extremal_sidecar_json(const LabeledExtremal& instance) {
    json j;
    j["family"] = instance.family;
    j["t"] = instance.t;
    j["s"] = instance.s;
    j["k"] = instance.k;
    j["ell"] = instance.copies;
    j["path_len"] = instance.path_len > 0 ? json(instance.path_len) : json(nullptr);
    j["n"] = instance.graph.n();
    j["graph6"] = emit_graph6(instance.graph);
    j["centers"] = instance.centers;

    json blocks = json::array();
    json attachments = json::array();
    for (int c = 0; c < instance.copies; ++c) {
        json copy_blocks = json::array();
        json copy_attach = json::array();
        for (int i = 1; i <= instance.t; ++i) {
            json row_blocks = json::array();
            json row_attach = json::array();
            for (int ip = 1; ip <= instance.s; ++ip) {
                row_blocks.push_back(instance.block(c, i, ip));
                row_attach.push_back(instance.attachment(c, i, ip));
            }
            copy_blocks.push_back(std::move(row_blocks));
            copy_attach.push_back(std::move(row_attach));
        }
        blocks.push_back(std::move(copy_blocks));
        attachments.push_back(std::move(copy_attach));
    }
    j["clique_blocks"] = std::move(blocks);
    j["attachments"] = std::move(attachments);
    j["path_internal"] = instance.path_internal;
    j["targets"] = {{"iota", instance.target_iota}, {"iota_prime", instance.target_iota_prime}};
    return j.dump();
}

}  // namespace isolation
