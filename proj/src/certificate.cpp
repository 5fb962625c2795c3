#include "hamdiff/certificate.hpp"

#include <map>

namespace hamdiff {

using nlohmann::ordered_json;

namespace {

PairFailure failure(const HamPath& a, const HamPath& b, std::size_t i, std::size_t j, std::string reason)
{
    PairFailure f{i, j, std::move(reason), {}};
    if (a.n() == b.n())
        f.cycle_lengths = cycle_lengths(UnionGraph(a, b));
    return f;
}

}  // namespace

Verification verify_family(const ConstructedFamily& family, VerifyMode mode)
{
    if (family.paths.empty())
        throw ValidationError("verify_family: empty family");
    const int n = family.n();
    for (const auto& p : family.paths)
        if (p.n() != n)
            throw ValidationError("verify_family: paths of mixed order");

    FamilyCertificate cert{n, family.claim, family.provenance, family.paths, {}};
    Verification out;
    const auto& paths = family.paths;
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            auto w = find_witness(paths[i], paths[j], family.claim);
            if (!w) {
                out.failures.push_back(failure(paths[i], paths[j], i, j,
                                               paths[i] == paths[j] ? "duplicate path" : "no witness"));
                if (mode == VerifyMode::FailFast)
                    return out;
                continue;
            }
            cert.witnesses.push_back({i, j, std::move(*w)});
        }
    if (out.failures.empty())
        out.certificate = std::move(cert);
    return out;
}

Verification recheck_certificate(const FamilyCertificate& cert, VerifyMode mode)
{
    Verification out;
    const auto& paths = cert.paths;
    std::map<std::pair<std::size_t, std::size_t>, const Witness*> by_pair;
    for (const auto& pw : cert.witnesses) {
        if (pw.i >= pw.j || pw.j >= paths.size() || !by_pair.emplace(std::pair(pw.i, pw.j), &pw.witness).second) {
            out.failures.push_back({pw.i, pw.j, "malformed or repeated witness pair", {}});
            if (mode == VerifyMode::FailFast)
                return out;
        }
    }
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            std::string reason;
            if (paths[i].n() != cert.n || paths[j].n() != cert.n)
                reason = "path order differs from header";
            else if (paths[i] == paths[j])
                reason = "duplicate path";
            else if (auto it = by_pair.find({i, j}); it == by_pair.end())
                reason = "missing witness";
            else if (!witness_is_valid(paths[i], paths[j], cert.predicate, *it->second))
                reason = "invalid witness";
            if (!reason.empty()) {
                out.failures.push_back(failure(paths[i], paths[j], i, j, std::move(reason)));
                if (mode == VerifyMode::FailFast)
                    return out;
            }
        }
    if (out.failures.empty())
        out.certificate = cert;
    return out;
}

ordered_json to_json(const FamilyCertificate& cert)
{
    ordered_json doc;
    doc["version"] = kCertificateVersion;
    doc["n"] = cert.n;
    doc["predicate"] = cert.predicate.render();
    doc["construction"] = cert.construction;
    doc["size"] = cert.paths.size();
    doc["paths"] = ordered_json::array();
    for (const auto& p : cert.paths)
        doc["paths"].push_back(p.to_string());
    doc["witnesses"] = ordered_json::array();
    for (const auto& pw : cert.witnesses) {
        ordered_json w;
        w["pair"] = {pw.i, pw.j};
        w["kind"] = pw.witness.kind == Witness::Kind::Cycle ? "cycle" : "clique4";
        w["vertices"] = pw.witness.vertices;
        doc["witnesses"].push_back(std::move(w));
    }
    return doc;
}

FamilyCertificate certificate_from_json(const ordered_json& doc)
{
    try {
        if (doc.at("version").get<int>() != kCertificateVersion)
            throw ValidationError("unsupported certificate version");
        FamilyCertificate cert;
        cert.n = doc.at("n").get<int>();
        cert.predicate = parse_predicate(doc.at("predicate").get<std::string>());
        cert.construction = doc.at("construction").get<std::string>();
        for (const auto& p : doc.at("paths")) {
            const auto text = p.get<std::string>();
            HamPath path = HamPath::parse(text);
            if (path.to_string() != text)
                throw ValidationError("path '" + text + "' is not in canonical form");
            cert.paths.push_back(std::move(path));
        }
        if (doc.at("size").get<std::size_t>() != cert.paths.size())
            throw ValidationError("size field does not match path list");
        for (const auto& w : doc.at("witnesses")) {
            const auto& pair = w.at("pair");
            if (!pair.is_array() || pair.size() != 2)
                throw ValidationError("witness pair must have two indices");
            PairWitness pw;
            pw.i = pair[0].get<std::size_t>();
            pw.j = pair[1].get<std::size_t>();
            const auto kind = w.at("kind").get<std::string>();
            if (kind == "cycle")
                pw.witness.kind = Witness::Kind::Cycle;
            else if (kind == "clique4")
                pw.witness.kind = Witness::Kind::Clique4;
            else
                throw ValidationError("unknown witness kind '" + kind + "'");
            pw.witness.vertices = w.at("vertices").get<std::vector<Vertex>>();
            cert.witnesses.push_back(std::move(pw));
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace hamdiff
