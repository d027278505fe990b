#include "flowkit/value.hpp"

#include <sstream>
#include <stdexcept>

namespace flowkit {

std::string ValueType::to_string() const {
  switch (tag) {
    case Tag::Unit: return "Unit";
    case Tag::Bool: return "Bool";
    case Tag::Int: return "Int";
    case Tag::Float: return "Float";
    case Tag::Str: return "Str";
    case Tag::List: return "List<" + args.at(0).to_string() + ">";
    case Tag::Tuple: {
      std::string out = "Tuple<";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        out += args[i].to_string();
      }
      return out + ">";
    }
  }
  return "?";
}

bool Value::ListV::operator==(const ListV& o) const { return items == o.items; }
bool Value::TupleV::operator==(const TupleV& o) const { return fields == o.fields; }

Value Value::list(std::vector<Value> items) { return Value(Repr(ListV{std::move(items)})); }
Value Value::tuple(std::vector<Value> fields) { return Value(Repr(TupleV{std::move(fields)})); }

bool Value::is_list() const { return std::holds_alternative<ListV>(v_); }
bool Value::is_tuple() const { return std::holds_alternative<TupleV>(v_); }

namespace {
[[noreturn]] void kind_error(const char* want) {
  throw std::runtime_error(std::string("value is not a ") + want);
}
}  // namespace

bool Value::as_bool() const {
  if (!is_bool()) kind_error("Bool");
  return std::get<bool>(v_);
}

std::int64_t Value::as_int() const {
  if (!is_int()) kind_error("Int");
  return std::get<std::int64_t>(v_);
}

double Value::as_float() const {
  if (!is_float()) kind_error("Float");
  return std::get<double>(v_);
}

const std::string& Value::as_str() const {
  if (!is_str()) kind_error("Str");
  return std::get<std::string>(v_);
}

const std::vector<Value>& Value::as_list() const {
  if (!is_list()) kind_error("List");
  return std::get<ListV>(v_).items;
}

const std::vector<Value>& Value::as_tuple() const {
  if (!is_tuple()) kind_error("Tuple");
  return std::get<TupleV>(v_).fields;
}

bool Value::matches(const ValueType& t) const {
  switch (t.tag) {
    case ValueType::Tag::Unit: return is_unit();
    case ValueType::Tag::Bool: return is_bool();
    case ValueType::Tag::Int: return is_int();
    case ValueType::Tag::Float: return is_float();
    case ValueType::Tag::Str: return is_str();
    case ValueType::Tag::List: {
      if (!is_list()) return false;
      for (const auto& v : as_list())
        if (!v.matches(t.elem())) return false;
      return true;
    }
    case ValueType::Tag::Tuple: {
      if (!is_tuple()) return false;
      const auto& fs = as_tuple();
      if (fs.size() != t.args.size()) return false;
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (!fs[i].matches(t.args[i])) return false;
      return true;
    }
  }
  return false;
}

bool Value::operator==(const Value& other) const { return v_ == other.v_; }

std::string Value::to_string() const {
  struct Printer {
    std::string operator()(const UnitV&) const { return "()"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const {
      std::ostringstream os;
      os << d;
      return os.str();
    }
    std::string operator()(const std::string& s) const { return "\"" + s + "\""; }
    std::string operator()(const ListV& l) const {
      std::string out = "[";
      for (std::size_t i = 0; i < l.items.size(); ++i) {
        if (i) out += ", ";
        out += l.items[i].to_string();
      }
      return out + "]";
    }
    std::string operator()(const TupleV& t) const {
      std::string out = "(";
      for (std::size_t i = 0; i < t.fields.size(); ++i) {
        if (i) out += ", ";
        out += t.fields[i].to_string();
      }
      return out + ")";
    }
  };
  return std::visit(Printer{}, v_);
}

}  // namespace flowkit
