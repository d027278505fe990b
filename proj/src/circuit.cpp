#include "flowkit/circuit.hpp"

#include <sstream>

#include "flowkit/datastore.hpp"

namespace flowkit {

struct CircuitFactory {
  static Circuit make(CircuitVariant node, Signature sig) {
    return Circuit(std::make_shared<const CircuitRepr>(
        CircuitRepr{std::move(node), std::move(sig)}));
  }
};

namespace {

void validate_port(const Port& p) {
  auto& reg = StoreRegistry::global();
  if (!reg.has_kind(p.kind.name))
    throw CompositionError(CompositionErrorKind::InvalidPort,
                           "invalid port " + p.to_string() + ": kind is not registered");
  if (!reg.supports(p.kind, p.value))
    throw CompositionError(CompositionErrorKind::InvalidPort,
                           "invalid port " + p.to_string() + ": " + p.kind.name +
                               " does not carry " + p.value.to_string());
}

}  // namespace

Circuit id_(const Port& p) {
  validate_port(p);
  return CircuitFactory::make(IdNode{p}, Signature({p}, {p}));
}

Circuit replicate_(const Port& p) {
  validate_port(p);
  return CircuitFactory::make(ReplicateNode{p}, Signature({p}, {p, p}));
}

Circuit swap_(const Port& p, const Port& q) {
  validate_port(p);
  validate_port(q);
  return CircuitFactory::make(SwapNode{p, q}, Signature({p, q}, {q, p}));
}

Circuit drop_l(const Port& p, const Port& q) {
  validate_port(p);
  validate_port(q);
  return CircuitFactory::make(DropLNode{p, q}, Signature({p, q}, {q}));
}

Circuit drop_r(const Port& p, const Port& q) {
  validate_port(p);
  validate_port(q);
  return CircuitFactory::make(DropRNode{p, q}, Signature({p, q}, {p}));
}

Circuit task_(TaskSpec spec) {
  if (spec.ins.empty())
    throw CompositionError(CompositionErrorKind::InvalidPort,
                           "task " + spec.name + " needs at least one input");
  if (!spec.body)
    throw CompositionError(CompositionErrorKind::InvalidPort,
                           "task " + spec.name + " has no body");
  for (const auto& p : spec.ins) validate_port(p);
  validate_port(spec.out);
  Signature sig(spec.ins, {spec.out});
  return CircuitFactory::make(TaskNode{std::move(spec)}, std::move(sig));
}

Circuit function_task(std::string name, std::function<Value(const Value&)> f, Port in, Port out) {
  TaskSpec spec;
  spec.name = std::move(name);
  spec.ins = {std::move(in)};
  spec.out = std::move(out);
  spec.body = [f = std::move(f)](const std::vector<Value>& vs) { return f(vs.at(0)); };
  return task_(std::move(spec));
}

Circuit then_(const Circuit& c1, const Circuit& c2) {
  Signature sig = compose_then(c1.signature(), c2.signature());
  return CircuitFactory::make(ThenNode{c1, c2}, std::move(sig));
}

Circuit beside(const Circuit& c1, const Circuit& c2) {
  Signature sig = compose_beside(c1.signature(), c2.signature());
  return CircuitFactory::make(BesideNode{c1, c2}, std::move(sig));
}

Circuit map_c(const Circuit& inner, const Port& in, const Port& out) {
  const Signature& is = inner.signature();
  if (is.ins.size() != 1 || is.outs.size() != 1 || !(is.ins[0].kind == kinds::Var) ||
      !(is.outs[0].kind == kinds::Var))
    throw CompositionError(CompositionErrorKind::InnerShapeError,
                           "map inner circuit must be [Var<a>] -> [Var<b>], got " +
                               is.to_string());
  validate_port(in);
  validate_port(out);
  if (!in.value.is_list() || !(in.value.elem() == is.ins[0].value))
    throw CompositionError(CompositionErrorKind::PortMismatch,
                           "map input port " + in.to_string() + " must carry List<" +
                               is.ins[0].value.to_string() + ">",
                           0);
  if (!out.value.is_list() || !(out.value.elem() == is.outs[0].value))
    throw CompositionError(CompositionErrorKind::PortMismatch,
                           "map output port " + out.to_string() + " must carry List<" +
                               is.outs[0].value.to_string() + ">",
                           0);
  return CircuitFactory::make(MapNode{inner, in, out}, Signature({in}, {out}));
}

Signature signature_of(const Circuit& c) {
  struct Visitor {
    Signature operator()(const IdNode& n) const { return Signature({n.port}, {n.port}); }
    Signature operator()(const ReplicateNode& n) const {
      return Signature({n.port}, {n.port, n.port});
    }
    Signature operator()(const SwapNode& n) const {
      return Signature({n.left, n.right}, {n.right, n.left});
    }
    Signature operator()(const DropLNode& n) const {
      return Signature({n.left, n.right}, {n.right});
    }
    Signature operator()(const DropRNode& n) const {
      return Signature({n.left, n.right}, {n.left});
    }
    Signature operator()(const TaskNode& n) const {
      return Signature(n.spec.ins, {n.spec.out});
    }
    Signature operator()(const ThenNode& n) const {
      return compose_then(signature_of(n.first), signature_of(n.second));
    }
    Signature operator()(const BesideNode& n) const {
      return compose_beside(signature_of(n.left), signature_of(n.right));
    }
    Signature operator()(const MapNode& n) const { return Signature({n.in}, {n.out}); }
  };
  return std::visit(Visitor{}, c.repr().node);
}

bool structural_equal(const Circuit& a, const Circuit& b) {
  const auto& na = a.repr().node;
  const auto& nb = b.repr().node;
  if (na.index() != nb.index()) return false;
  struct Visitor {
    const CircuitVariant& other;
    bool operator()(const IdNode& n) const { return std::get<IdNode>(other).port == n.port; }
    bool operator()(const ReplicateNode& n) const {
      return std::get<ReplicateNode>(other).port == n.port;
    }
    bool operator()(const SwapNode& n) const {
      const auto& o = std::get<SwapNode>(other);
      return o.left == n.left && o.right == n.right;
    }
    bool operator()(const DropLNode& n) const {
      const auto& o = std::get<DropLNode>(other);
      return o.left == n.left && o.right == n.right;
    }
    bool operator()(const DropRNode& n) const {
      const auto& o = std::get<DropRNode>(other);
      return o.left == n.left && o.right == n.right;
    }
    bool operator()(const TaskNode& n) const {
      const auto& o = std::get<TaskNode>(other);
      return o.spec.name == n.spec.name && o.spec.ins == n.spec.ins && o.spec.out == n.spec.out &&
             o.spec.out_path == n.spec.out_path;
    }
    bool operator()(const ThenNode& n) const {
      const auto& o = std::get<ThenNode>(other);
      return structural_equal(n.first, o.first) && structural_equal(n.second, o.second);
    }
    bool operator()(const BesideNode& n) const {
      const auto& o = std::get<BesideNode>(other);
      return structural_equal(n.left, o.left) && structural_equal(n.right, o.right);
    }
    bool operator()(const MapNode& n) const {
      const auto& o = std::get<MapNode>(other);
      return structural_equal(n.inner, o.inner) && o.in == n.in && o.out == n.out;
    }
  };
  return std::visit(Visitor{nb}, na);
}

namespace {

void render(const Circuit& c, std::ostream& os, const std::string& prefix, bool last, bool root) {
  std::string branch = root ? "" : (last ? "`- " : "|- ");
  std::string label;
  struct Labeler {
    std::string operator()(const IdNode& n) const { return "id " + n.port.to_string(); }
    std::string operator()(const ReplicateNode& n) const {
      return "replicate " + n.port.to_string();
    }
    std::string operator()(const SwapNode& n) const {
      return "swap " + n.left.to_string() + " " + n.right.to_string();
    }
    std::string operator()(const DropLNode&) const { return "dropL"; }
    std::string operator()(const DropRNode&) const { return "dropR"; }
    std::string operator()(const TaskNode& n) const { return "task " + n.spec.name; }
    std::string operator()(const ThenNode&) const { return "then"; }
    std::string operator()(const BesideNode&) const { return "beside"; }
    std::string operator()(const MapNode&) const { return "map"; }
  };
  label = std::visit(Labeler{}, c.repr().node);
  os << prefix << branch << label << "  :: " << c.signature().to_string() << "\n";
  std::string child_prefix = root ? prefix : prefix + (last ? "   " : "|  ");
  if (const auto* t = std::get_if<ThenNode>(&c.repr().node)) {
    render(t->first, os, child_prefix, false, false);
    render(t->second, os, child_prefix, true, false);
  } else if (const auto* b = std::get_if<BesideNode>(&c.repr().node)) {
    render(b->left, os, child_prefix, false, false);
    render(b->right, os, child_prefix, true, false);
  } else if (const auto* m = std::get_if<MapNode>(&c.repr().node)) {
    render(m->inner, os, child_prefix, true, false);
  }
}

}  // namespace

std::string render_tree(const Circuit& c) {
  std::ostringstream os;
  render(c, os, "", true, true);
  return os.str();
}

}  // namespace flowkit
