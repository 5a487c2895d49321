#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sharplab/linear_map.hpp"

#include "json.hpp"

namespace sharplab {

/// A process placed in a diagram: named box with typed input ports (bottom)
/// and output ports (top). The payload may be inline or supplied later
/// through a bindings map.
template <class S>
struct Box {
    std::string name;
    std::string role;  // state | effect | scalar | process
    std::vector<std::size_t> dims_in;
    std::vector<std::size_t> dims_out;
    std::optional<LinearMap<S>> payload;
};

/// Reference to one port of one box.
struct PortRef {
    std::string box;
    std::size_t port = 0;
    friend bool operator==(const PortRef&, const PortRef&) = default;
    friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

/// Wire from an output port to an input port.
struct Wire {
    PortRef from;  // output port of source box
    PortRef to;    // input port of target box
};

struct Violation {
    std::string kind;  // DimensionMismatch | PortReuse | CycleDetected | ...
    std::string detail;
};

struct ValidationResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const {
        std::string s;
        for (const auto& v : violations) s += v.kind + ": " + v.detail + "\n";
        return s;
    }
};

struct InvalidDiagram : std::runtime_error {
    ValidationResult result;
    explicit InvalidDiagram(ValidationResult r)
        : std::runtime_error("invalid diagram:\n" + r.str()), result(std::move(r)) {}
};

struct UnboundBox : std::runtime_error {
    explicit UnboundBox(const std::string& name) : std::runtime_error("unbound box: " + name) {}
};

/// Acyclic wiring of boxes. Dangling inputs/outputs are explicit ordered
/// lists; the empty diagram is valid and denotes the scalar 1.
template <class S>
class Diagram {
  public:
    std::vector<Box<S>> boxes;
    std::vector<Wire> wires;
    std::vector<PortRef> inputs;   // dangling input ports, in domain order
    std::vector<PortRef> outputs;  // dangling output ports, in codomain order

    const Box<S>* find_box(const std::string& name) const {
        for (const auto& b : boxes)
            if (b.name == name) return &b;
        return nullptr;
    }

    SpaceType input_type() const { return port_type(inputs, /*is_input=*/true); }
    SpaceType output_type() const { return port_type(outputs, /*is_input=*/false); }

    ValidationResult validate() const {
        ValidationResult res;
        std::set<std::string> names;
        for (const auto& b : boxes) {
            if (!names.insert(b.name).second)
                res.violations.push_back({"DuplicateBox", b.name});
            if (b.payload) {
                if (b.payload->domain().dims() != b.dims_in || b.payload->codomain().dims() != b.dims_out)
                    res.violations.push_back({"PayloadShapeMismatch", b.name});
            }
        }

        auto port_dim = [&](const PortRef& p, bool input) -> std::optional<std::size_t> {
            const Box<S>* b = find_box(p.box);
            if (!b) {
                res.violations.push_back({"UnknownBox", p.box});
                return std::nullopt;
            }
            const auto& dims = input ? b->dims_in : b->dims_out;
            if (p.port >= dims.size()) {
                res.violations.push_back({"BadPortIndex", p.box + "[" + std::to_string(p.port) + "]"});
                return std::nullopt;
            }
            return dims[p.port];
        };

        // Linearity: each port used by at most one wire or dangling slot.
        std::set<std::pair<PortRef, bool>> used;  // (port, is_input_side)
        auto use = [&](const PortRef& p, bool input_side) {
            if (!used.insert({p, input_side}).second)
                res.violations.push_back({"PortReuse", p.box + "[" + std::to_string(p.port) + "]"});
        };
        for (const auto& w : wires) {
            auto d_out = port_dim(w.from, false);
            auto d_in = port_dim(w.to, true);
            use(w.from, false);
            use(w.to, true);
            if (d_out && d_in && *d_out != *d_in)
                res.violations.push_back(
                    {"DimensionMismatch", w.from.box + "[" + std::to_string(w.from.port) + "] dim " +
                                              std::to_string(*d_out) + " -> " + w.to.box + "[" +
                                              std::to_string(w.to.port) + "] dim " + std::to_string(*d_in)});
        }
        for (const auto& p : inputs) {
            port_dim(p, true);
            use(p, true);
        }
        for (const auto& p : outputs) {
            port_dim(p, false);
            use(p, false);
        }

        // Every port must be either wired or declared dangling.
        for (const auto& b : boxes) {
            for (std::size_t k = 0; k < b.dims_in.size(); ++k)
                if (!used.count({{b.name, k}, true}))
                    res.violations.push_back({"UnconnectedPort", b.name + " input " + std::to_string(k)});
            for (std::size_t k = 0; k < b.dims_out.size(); ++k)
                if (!used.count({{b.name, k}, false}))
                    res.violations.push_back({"UnconnectedPort", b.name + " output " + std::to_string(k)});
        }

        // Acyclicity of the box-connectivity graph.
        std::map<std::string, std::vector<std::string>> succ;
        std::map<std::string, int> indeg;
        for (const auto& b : boxes) indeg[b.name] = 0;
        for (const auto& w : wires)
            if (find_box(w.from.box) && find_box(w.to.box)) {
                succ[w.from.box].push_back(w.to.box);
                indeg[w.to.box]++;
            }
        std::vector<std::string> queue;
        for (auto& [n, d] : indeg)
            if (d == 0) queue.push_back(n);
        std::size_t seen = 0;
        while (!queue.empty()) {
            auto n = queue.back();
            queue.pop_back();
            ++seen;
            for (const auto& m : succ[n])
                if (--indeg[m] == 0) queue.push_back(m);
        }
        if (seen != boxes.size()) {
            std::string cyc;
            for (auto& [n, d] : indeg)
                if (d > 0) cyc += (cyc.empty() ? "" : ", ") + n;
            res.violations.push_back({"CycleDetected", cyc});
        }
        return res;
    }

  private:
    SpaceType port_type(const std::vector<PortRef>& ports, bool is_input) const {
        std::vector<std::size_t> dims;
        for (const auto& p : ports) {
            const Box<S>* b = find_box(p.box);
            if (!b) throw std::out_of_range("unknown box " + p.box);
            const auto& src = is_input ? b->dims_in : b->dims_out;
            dims.push_back(src.at(p.port));
        }
        return SpaceType(std::move(dims));
    }
};

namespace detail {

// One summation variable per edge: wires get internal variables, dangling
// ports get variables fixed by the requested matrix entry.
struct EdgeVars {
    std::map<std::pair<PortRef, bool>, std::size_t> var_of_port;  // (port, input_side) -> var
    std::vector<std::size_t> dim_of_var;
    std::vector<std::size_t> internal_vars;
};

}  // namespace detail

/// Tensor-contract a validated, fully bound diagram to a LinearMap whose
/// domain/codomain follow the declared dangling-port order. Summation is
/// direct over all wire index assignments; desk-scale diagrams only.
template <class S>
LinearMap<S> eval_diagram(const Diagram<S>& d,
                          const std::map<std::string, LinearMap<S>>& bindings = {}) {
    auto vr = d.validate();
    if (!vr.ok()) throw InvalidDiagram(vr);

    std::map<std::string, const LinearMap<S>*> bound;
    std::vector<LinearMap<S>> storage;
    storage.reserve(d.boxes.size());
    for (const auto& b : d.boxes) {
        if (b.payload) {
            storage.push_back(*b.payload);
        } else {
            auto it = bindings.find(b.name);
            if (it == bindings.end()) throw UnboundBox(b.name);
            if (it->second.domain().dims() != b.dims_in || it->second.codomain().dims() != b.dims_out)
                throw TypeMismatch(SpaceType(b.dims_in), it->second.domain());
            storage.push_back(it->second);
        }
    }
    for (std::size_t k = 0; k < d.boxes.size(); ++k) bound[d.boxes[k].name] = &storage[k];

    detail::EdgeVars ev;
    auto new_var = [&](std::size_t dim) {
        ev.dim_of_var.push_back(dim);
        return ev.dim_of_var.size() - 1;
    };
    auto dim_at = [&](const PortRef& p, bool input_side) {
        const Box<S>* b = d.find_box(p.box);
        return (input_side ? b->dims_in : b->dims_out)[p.port];
    };
    for (const auto& w : d.wires) {
        auto v = new_var(dim_at(w.from, false));
        ev.var_of_port[{w.from, false}] = v;
        ev.var_of_port[{w.to, true}] = v;
        ev.internal_vars.push_back(v);
    }
    std::vector<std::size_t> in_vars, out_vars;
    for (const auto& p : d.inputs) {
        auto v = new_var(dim_at(p, true));
        ev.var_of_port[{p, true}] = v;
        in_vars.push_back(v);
    }
    for (const auto& p : d.outputs) {
        auto v = new_var(dim_at(p, false));
        ev.var_of_port[{p, false}] = v;
        out_vars.push_back(v);
    }

    auto dom = d.input_type();
    auto cod = d.output_type();
    auto out = LinearMap<S>::zero(dom, cod);

    std::vector<std::size_t> assign(ev.dim_of_var.size(), 0);
    auto mixed_radix = [&](const std::vector<std::size_t>& vars) {
        std::size_t idx = 0;
        for (auto v : vars) idx = idx * ev.dim_of_var[v] + assign[v];
        return idx;
    };
    auto box_entry = [&](const Box<S>& b) {
        std::size_t row = 0, col = 0;
        for (std::size_t k = 0; k < b.dims_out.size(); ++k)
            row = row * b.dims_out[k] + assign[ev.var_of_port.at({{b.name, k}, false})];
        for (std::size_t k = 0; k < b.dims_in.size(); ++k)
            col = col * b.dims_in[k] + assign[ev.var_of_port.at({{b.name, k}, true})];
        return bound.at(b.name)->at(row, col);
    };

    // Enumerate every assignment of every edge variable; dangling variables
    // pick the output entry, internal ones are summed over.
    std::size_t total = 1;
    for (auto dv : ev.dim_of_var) total *= dv;
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t v = ev.dim_of_var.size(); v-- > 0;) {
            assign[v] = rem % ev.dim_of_var[v];
            rem /= ev.dim_of_var[v];
        }
        S term = ScalarTraits<S>::one();
        for (const auto& b : d.boxes) term *= box_entry(b);
        out.at(mixed_radix(out_vars), mixed_radix(in_vars)) += term;
    }
    return out;
}

enum class ComposeMode { Seq, Par };

/// Glue two diagrams. Seq mode feeds d1's dangling outputs into d2's
/// dangling inputs (so eval = eval(d2) . eval(d1)); par mode is disjoint
/// juxtaposition. Either way eval commutes with composition.
template <class S>
Diagram<S> compose(ComposeMode mode, const Diagram<S>& d1, const Diagram<S>& d2) {
    Diagram<S> out = d1;
    std::set<std::string> names;
    for (const auto& b : d1.boxes) names.insert(b.name);

    std::map<std::string, std::string> rename;
    for (const auto& b : d2.boxes) {
        std::string n = b.name;
        while (names.count(n)) n += "'";
        names.insert(n);
        rename[b.name] = n;
        auto copy = b;
        copy.name = n;
        out.boxes.push_back(std::move(copy));
    }
    auto rn = [&](PortRef p) {
        p.box = rename.at(p.box);
        return p;
    };
    for (const auto& w : d2.wires) out.wires.push_back({rn(w.from), rn(w.to)});

    if (mode == ComposeMode::Par) {
        for (const auto& p : d2.inputs) out.inputs.push_back(rn(p));
        for (const auto& p : d2.outputs) out.outputs.push_back(rn(p));
        return out;
    }

    if (d1.output_type() != d2.input_type()) throw TypeMismatch(d2.input_type(), d1.output_type());
    out.outputs.clear();
    for (std::size_t k = 0; k < d1.outputs.size(); ++k)
        out.wires.push_back({d1.outputs[k], rn(d2.inputs[k])});
    for (const auto& p : d2.outputs) out.outputs.push_back(rn(p));
    return out;
}

// --- JSON file format -------------------------------------------------------
//
// { "boxes": [{"name", "role", "dims_in", "dims_out", "matrix"?}],
//   "wires": [[src_box, out_port, dst_box, in_port], ...],
//   "inputs": [[box, port], ...], "outputs": [[box, port], ...] }
//
// Matrix entries are numbers, rational strings "a/b", or [re, im] pairs of
// either. The exact backend parses rational strings, the float backend
// parses numbers.

template <class S>
S parse_scalar_entry(const nlohmann::json& j);

template <>
inline GaussianRational parse_scalar_entry<GaussianRational>(const nlohmann::json& j) {
    auto part = [](const nlohmann::json& p) -> mpq_class {
        if (p.is_string()) return parse_rational(p.get<std::string>());
        if (p.is_number_integer()) return mpq_class(p.get<long>());
        throw std::invalid_argument("exact backend needs integer or rational-string entries");
    };
    if (j.is_array()) {
        if (j.size() != 2) throw std::invalid_argument("complex entry must be [re, im]");
        return {part(j[0]), part(j[1])};
    }
    return {part(j), 0};
}

template <>
inline std::complex<double> parse_scalar_entry<std::complex<double>>(const nlohmann::json& j) {
    auto part = [](const nlohmann::json& p) -> double {
        if (p.is_string()) return parse_rational(p.get<std::string>()).get_d();
        return p.get<double>();
    };
    if (j.is_array()) {
        if (j.size() != 2) throw std::invalid_argument("complex entry must be [re, im]");
        return {part(j[0]), part(j[1])};
    }
    return {part(j), 0.0};
}

template <class S>
Diagram<S> diagram_from_json(const nlohmann::json& j) {
    Diagram<S> d;
    for (const auto& jb : j.value("boxes", nlohmann::json::array())) {
        Box<S> b;
        b.name = jb.at("name").get<std::string>();
        b.role = jb.value("role", "process");
        b.dims_in = jb.value("dims_in", std::vector<std::size_t>{});
        b.dims_out = jb.value("dims_out", std::vector<std::size_t>{});
        if (jb.contains("matrix")) {
            SpaceType dom{std::vector<std::size_t>(b.dims_in)};
            SpaceType cod{std::vector<std::size_t>(b.dims_out)};
            std::vector<S> entries;
            for (const auto& row : jb.at("matrix"))
                for (const auto& cell : row) entries.push_back(parse_scalar_entry<S>(cell));
            b.payload = LinearMap<S>(dom, cod, std::move(entries));
        }
        d.boxes.push_back(std::move(b));
    }
    for (const auto& jw : j.value("wires", nlohmann::json::array()))
        d.wires.push_back({{jw.at(0).get<std::string>(), jw.at(1).get<std::size_t>()},
                           {jw.at(2).get<std::string>(), jw.at(3).get<std::size_t>()}});
    for (const auto& jp : j.value("inputs", nlohmann::json::array()))
        d.inputs.push_back({jp.at(0).get<std::string>(), jp.at(1).get<std::size_t>()});
    for (const auto& jp : j.value("outputs", nlohmann::json::array()))
        d.outputs.push_back({jp.at(0).get<std::string>(), jp.at(1).get<std::size_t>()});
    return d;
}

}  // namespace sharplab
