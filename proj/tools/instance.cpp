#include "instance.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace liquidpower::cli {

using nlohmann::json;

namespace {

Rational parse_ratio_field(const json& value, const std::string& field) {
    try {
        if (value.is_string()) return parse_rational(value.get<std::string>());
        if (value.is_number_integer()) return Rational(value.get<std::int64_t>(), 1);
        if (value.is_number_float()) {
            std::ostringstream text;
            text.precision(17);
            text << value.get<double>();
            return parse_rational(text.str());
        }
    } catch (const std::exception& e) {
        throw InstanceError(field, e.what());
    }
    throw InstanceError(field, "expected a rational string like \"1/2\", or a number");
}

NetworkSpec parse_network(const json& net) {
    NetworkSpec spec;
    if (!net.is_object()) throw InstanceError("network", "expected an object");
    if (!net.contains("family")) throw InstanceError("network.family", "missing");
    try {
        spec.family = network_family_from_string(net.at("family").get<std::string>());
    } catch (const std::exception& e) {
        throw InstanceError("network.family", e.what());
    }
    auto get_int = [&](const char* key, int& slot, bool required) {
        if (!net.contains(key)) {
            if (required) throw InstanceError(std::string("network.") + key, "missing");
            return;
        }
        if (!net.at(key).is_number_integer())
            throw InstanceError(std::string("network.") + key, "expected an integer");
        slot = net.at(key).get<int>();
    };
    auto get_double = [&](const char* key, double& slot, bool required) {
        if (!net.contains(key)) {
            if (required) throw InstanceError(std::string("network.") + key, "missing");
            return;
        }
        if (!net.at(key).is_number())
            throw InstanceError(std::string("network.") + key, "expected a number");
        slot = net.at(key).get<double>();
    };
    switch (spec.family) {
        case NetworkFamily::gnp:
            get_int("n", spec.n, true);
            get_double("p", spec.p, true);
            break;
        case NetworkFamily::pref_attach:
            get_int("n", spec.n, true);
            get_int("m", spec.m, true);
            break;
        case NetworkFamily::small_world:
            get_int("n", spec.n, true);
            get_int("k", spec.k, true);
            spec.rewire_p = 0.2;
            get_double("rewire_p", spec.rewire_p, false);
            break;
        case NetworkFamily::spatial:
            get_int("n", spec.n, true);
            get_int("k", spec.k, true);
            if (net.contains("dist")) {
                try {
                    spec.dist = spatial_dist_from_string(net.at("dist").get<std::string>());
                } catch (const std::exception& e) {
                    throw InstanceError("network.dist", e.what());
                }
            }
            break;
        case NetworkFamily::k_layers:
            get_int("layers", spec.layers, true);
            get_int("layer_size", spec.layer_size, true);
            spec.n = spec.layers * spec.layer_size;
            break;
    }
    if (net.contains("seed")) {
        if (!net.at("seed").is_number_integer())
            throw InstanceError("network.seed", "expected an integer");
        spec.seed = net.at("seed").get<std::uint64_t>();
    }
    return spec;
}

} // namespace

BehaviorModel Instance::model() const {
    switch (behavior.kind) {
        case BehaviorKind::global_uniformity: return BehaviorModel::global_uniformity(graph);
        case BehaviorKind::constant_pd: return BehaviorModel::constant_pd(graph, behavior.constant);
        case BehaviorKind::per_voter: return BehaviorModel::per_voter(graph, behavior.per_voter);
    }
    throw InstanceError("behavior", "unknown behavior kind");
}

Instance parse_instance(const json& doc) {
    if (!doc.is_object()) throw InstanceError("", "instance must be a JSON object");

    // voters: a count or a label list
    int n = 0;
    std::vector<std::string> labels;
    if (!doc.contains("voters")) throw InstanceError("voters", "missing");
    const json& voters = doc.at("voters");
    if (voters.is_number_integer()) {
        n = voters.get<int>();
        if (n < 0) throw InstanceError("voters", "voter count must be nonnegative");
        labels.reserve(n);
        for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
    } else if (voters.is_array()) {
        n = static_cast<int>(voters.size());
        for (std::size_t t = 0; t < voters.size(); ++t) {
            if (!voters[t].is_string())
                throw InstanceError("voters[" + std::to_string(t) + "]", "expected a string label");
            labels.push_back(voters[t].get<std::string>());
        }
    } else {
        throw InstanceError("voters", "expected a count or a list of labels");
    }

    if (!doc.contains("weights")) throw InstanceError("weights", "missing");
    const json& jweights = doc.at("weights");
    if (!jweights.is_array() || static_cast<int>(jweights.size()) != n)
        throw InstanceError("weights", "expected an array of " + std::to_string(n) + " integers");
    std::vector<std::int64_t> weights(n);
    for (int v = 0; v < n; ++v) {
        if (!jweights[v].is_number_integer())
            throw InstanceError("weights[" + std::to_string(v) + "]", "expected an integer");
        weights[v] = jweights[v].get<std::int64_t>();
    }

    if (!doc.contains("quota")) throw InstanceError("quota", "missing");
    const Rational quota = parse_ratio_field(doc.at("quota"), "quota");

    std::optional<std::vector<int>> delegatees;
    if (doc.contains("delegatees")) {
        const json& jd = doc.at("delegatees");
        if (!jd.is_array()) throw InstanceError("delegatees", "expected an array of voter ids");
        std::vector<int> ids;
        for (std::size_t t = 0; t < jd.size(); ++t) {
            if (!jd[t].is_number_integer())
                throw InstanceError("delegatees[" + std::to_string(t) + "]",
                                    "expected a voter id");
            ids.push_back(jd[t].get<int>());
        }
        delegatees = std::move(ids);
    }

    if (doc.contains("edges") && doc.contains("network"))
        throw InstanceError("edges", "give either explicit edges or a network spec, not both");

    std::optional<NetworkSpec> network;
    auto build_graph = [&]() -> DelegationGraph {
        if (doc.contains("network")) {
            network = parse_network(doc.at("network"));
            if (network->family != NetworkFamily::k_layers && network->n != n)
                throw InstanceError("network.n", "network size differs from the voter count");
            if (network->family == NetworkFamily::k_layers &&
                network->layers * network->layer_size != n)
                throw InstanceError("network", "layers * layer_size differs from the voter count");
            try {
                return generate(*network);
            } catch (const std::exception& e) {
                throw InstanceError("network", e.what());
            }
        }
        if (doc.contains("edges")) {
            const json& jedges = doc.at("edges");
            if (!jedges.is_array()) throw InstanceError("edges", "expected an array of [from, to]");
            std::vector<std::pair<int, int>> arcs;
            for (std::size_t t = 0; t < jedges.size(); ++t) {
                const json& e = jedges[t];
                if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                    !e[1].is_number_integer())
                    throw InstanceError("edges[" + std::to_string(t) + "]",
                                        "expected a [from, to] pair");
                arcs.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
            try {
                return DelegationGraph::from_edges(n, arcs);
            } catch (const std::exception& e) {
                throw InstanceError("edges", e.what());
            }
        }
        if (delegatees) {
            try {
                return DelegationGraph::complete_bipartite(n, *delegatees);
            } catch (const std::exception& e) {
                throw InstanceError("delegatees", e.what());
            }
        }
        return DelegationGraph::empty(n);
    };
    DelegationGraph graph = build_graph();

    BehaviorSpec behavior;
    if (doc.contains("behavior")) {
        const json& jb = doc.at("behavior");
        if (jb.is_string()) {
            if (jb.get<std::string>() != "global_uniformity")
                throw InstanceError("behavior", "unknown behavior '" + jb.get<std::string>() +
                                                    "'");
        } else if (jb.is_object()) {
            if (jb.contains("constant_pd")) {
                behavior.kind = BehaviorKind::constant_pd;
                behavior.constant = parse_ratio_field(jb.at("constant_pd"), "behavior.constant_pd");
            } else if (jb.contains("per_voter")) {
                const json& jp = jb.at("per_voter");
                if (!jp.is_array() || static_cast<int>(jp.size()) != n)
                    throw InstanceError("behavior.per_voter",
                                        "expected an array of " + std::to_string(n) + " values");
                behavior.kind = BehaviorKind::per_voter;
                for (int v = 0; v < n; ++v)
                    behavior.per_voter.push_back(parse_ratio_field(
                        jp[v], "behavior.per_voter[" + std::to_string(v) + "]"));
            } else if (jb.contains("global_uniformity")) {
                behavior.kind = BehaviorKind::global_uniformity;
            } else {
                throw InstanceError("behavior",
                                    "expected global_uniformity, constant_pd or per_voter");
            }
        } else {
            throw InstanceError("behavior", "expected a string or an object");
        }
    }

    try {
        WeightedVotingGame game(std::move(weights), quota);
        Instance instance{std::move(graph), std::move(game), std::move(behavior),
                          std::move(labels), std::move(delegatees), std::move(network)};
        instance.model(); // validate behavior against the graph now, not at use time
        return instance;
    } catch (const InstanceError&) {
        throw;
    } catch (const std::exception& e) {
        throw InstanceError("", e.what());
    }
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InstanceError("", "cannot open instance file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InstanceError("", std::string("JSON parse error: ") + e.what());
    }
    return parse_instance(doc);
}

json instance_to_json(const Instance& instance) {
    json doc;
    doc["voters"] = instance.labels;
    doc["weights"] = instance.game.weights();
    doc["quota"] = instance.game.quota().str();
    if (instance.network) {
        json net;
        net["family"] = to_string(instance.network->family);
        switch (instance.network->family) {
            case NetworkFamily::gnp:
                net["n"] = instance.network->n;
                net["p"] = instance.network->p;
                break;
            case NetworkFamily::pref_attach:
                net["n"] = instance.network->n;
                net["m"] = instance.network->m;
                break;
            case NetworkFamily::small_world:
                net["n"] = instance.network->n;
                net["k"] = instance.network->k;
                net["rewire_p"] = instance.network->rewire_p;
                break;
            case NetworkFamily::spatial:
                net["n"] = instance.network->n;
                net["k"] = instance.network->k;
                net["dist"] = to_string(instance.network->dist);
                break;
            case NetworkFamily::k_layers:
                net["layers"] = instance.network->layers;
                net["layer_size"] = instance.network->layer_size;
                break;
        }
        if (instance.network->family != NetworkFamily::k_layers)
            net["seed"] = instance.network->seed;
        doc["network"] = std::move(net);
    } else {
        json edges = json::array();
        for (const auto& [u, v] : instance.graph.arcs()) edges.push_back({u, v});
        doc["edges"] = std::move(edges);
    }
    if (instance.delegatees) doc["delegatees"] = *instance.delegatees;
    switch (instance.behavior.kind) {
        case BehaviorKind::global_uniformity:
            doc["behavior"] = "global_uniformity";
            break;
        case BehaviorKind::constant_pd:
            doc["behavior"] = json{{"constant_pd", instance.behavior.constant.str()}};
            break;
        case BehaviorKind::per_voter: {
            json list = json::array();
            for (const auto& r : instance.behavior.per_voter) list.push_back(r.str());
            doc["behavior"] = json{{"per_voter", std::move(list)}};
            break;
        }
    }
    return doc;
}

} // namespace liquidpower::cli
