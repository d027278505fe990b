#ifndef FLOWKIT_VALUE_HPP
#define FLOWKIT_VALUE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace flowkit {

// Structural description of the values a port carries. List and Tuple nest
// arbitrarily; equality is structural.
struct ValueType {
  enum class Tag { Unit, Bool, Int, Float, Str, List, Tuple };

  Tag tag = Tag::Unit;
  // List: exactly one element type. Tuple: one entry per field. Empty otherwise.
  std::vector<ValueType> args;

  bool operator==(const ValueType&) const = default;

  bool is_list() const { return tag == Tag::List; }
  bool is_tuple() const { return tag == Tag::Tuple; }
  bool is_scalar() const { return !is_list() && !is_tuple(); }
  const ValueType& elem() const { return args.at(0); }

  std::string to_string() const;

  static ValueType unit() { return {Tag::Unit, {}}; }
  static ValueType boolean() { return {Tag::Bool, {}}; }
  static ValueType integer() { return {Tag::Int, {}}; }
  static ValueType real() { return {Tag::Float, {}}; }
  static ValueType str() { return {Tag::Str, {}}; }
  static ValueType list(ValueType e) { return {Tag::List, {std::move(e)}}; }
  static ValueType tuple(std::vector<ValueType> fields) { return {Tag::Tuple, std::move(fields)}; }
};

// A runtime value flowing between tasks.
class Value {
public:
  struct UnitV {
    bool operator==(const UnitV&) const = default;
  };
  struct ListV;
  struct TupleV;

  Value() : v_(UnitV{}) {}

  static Value unit() { return Value(); }
  static Value boolean(bool b) { return Value(Repr(b)); }
  static Value integer(std::int64_t i) { return Value(Repr(i)); }
  static Value real(double d) { return Value(Repr(d)); }
  static Value str(std::string s) { return Value(Repr(std::move(s))); }
  static Value list(std::vector<Value> items);
  static Value tuple(std::vector<Value> fields);

  bool is_unit() const { return std::holds_alternative<UnitV>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_float() const { return std::holds_alternative<double>(v_); }
  bool is_str() const { return std::holds_alternative<std::string>(v_); }
  bool is_list() const;
  bool is_tuple() const;

  // Accessors throw std::runtime_error on a kind mismatch, so a task body
  // using the wrong accessor fails the job instead of the process.
  bool as_bool() const;
  std::int64_t as_int() const;
  double as_float() const;
  const std::string& as_str() const;
  const std::vector<Value>& as_list() const;
  const std::vector<Value>& as_tuple() const;

  // Does the value conform to the type? An empty list matches every List type.
  bool matches(const ValueType& t) const;

  bool operator==(const Value& other) const;

  std::string to_string() const;

  struct ListV {
    std::vector<Value> items;
    bool operator==(const ListV&) const;
  };
  struct TupleV {
    std::vector<Value> fields;
    bool operator==(const TupleV&) const;
  };

private:
  using Repr = std::variant<UnitV, bool, std::int64_t, double, std::string, ListV, TupleV>;

  explicit Value(Repr r) : v_(std::move(r)) {}

  Repr v_;
};

}  // namespace flowkit

#endif
