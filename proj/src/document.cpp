#include "lexraf/document.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace lexraf {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, "field '" + field + "': " + what);
}

std::vector<std::string> string_list(const Json& root, const std::string& field) {
  if (!root.contains(field)) bad_field(field, "missing");
  const Json& node = root.at(field);
  if (!node.is_array()) bad_field(field, "expected an array of labels");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) bad_field(field, "labels must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rational rational_field(const Json& node, const std::string& field) {
  if (!node.is_string()) bad_field(field, "expected a rational string such as \"4/5\" or \"0.8\"");
  try {
    return Rational::parse(node.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, "field '" + field + "': " + e.what());
  }
}

InputDocument::LabelValues label_values(const Json& node, const std::string& field) {
  if (!node.is_object()) bad_field(field, "expected an object keyed by alternative label");
  InputDocument::LabelValues out;
  for (const auto& [label, value] : node.items()) {
    out.emplace_back(label, rational_field(value, field + "." + label));
  }
  return out;
}

// Reorders `values` to follow `order`; every label must appear exactly once.
template <typename T>
std::vector<T> align(const std::vector<std::pair<std::string, T>>& values,
                     const std::vector<std::string>& order, const std::string& field) {
  std::vector<T> out;
  out.reserve(order.size());
  for (const auto& label : order) {
    auto it = std::find_if(values.begin(), values.end(),
                           [&](const auto& kv) { return kv.first == label; });
    if (it == values.end()) bad_field(field, "no value for alternative '" + label + "'");
    out.push_back(it->second);
  }
  for (const auto& [label, value] : values) {
    if (std::find(order.begin(), order.end(), label) == order.end()) {
      bad_field(field, "unknown alternative '" + label + "'");
    }
  }
  return out;
}

}  // namespace

InputDocument parse_document(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw Error(ErrorKind::InvalidArgument, "document must be a JSON object");

  InputDocument doc;
  doc.alternatives = string_list(root, "alternatives");
  doc.priority = string_list(root, "priority");

  if (root.contains("payoffs")) doc.payoffs = label_values(root.at("payoffs"), "payoffs");

  if (root.contains("weights")) {
    const Json& node = root.at("weights");
    if (!node.is_object()) bad_field("weights", "expected an object keyed by alternative label");
    std::vector<std::pair<std::string, unsigned>> weights;
    for (const auto& [label, value] : node.items()) {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 1) {
        bad_field("weights." + label, "expected a positive integer");
      }
      weights.emplace_back(label, value.get<unsigned>());
    }
    doc.weights = std::move(weights);
  }

  if (!root.contains("rafs")) bad_field("rafs", "missing");
  const Json& rafs = root.at("rafs");
  if (!rafs.is_object()) bad_field("rafs", "expected an object of named RAFs");
  for (const auto& [name, values] : rafs.items()) {
    doc.rafs.emplace_back(name, label_values(values, "rafs." + name));
  }
  return doc;
}

std::string serialize_document(const InputDocument& doc) {
  Json root = Json::object();
  root["alternatives"] = doc.alternatives;
  root["priority"] = doc.priority;
  auto values_json = [](const InputDocument::LabelValues& values) {
    Json node = Json::object();
    for (const auto& [label, value] : values) node[label] = value.to_string();
    return node;
  };
  if (doc.payoffs) root["payoffs"] = values_json(*doc.payoffs);
  if (doc.weights) {
    Json node = Json::object();
    for (const auto& [label, w] : *doc.weights) node[label] = w;
    root["weights"] = node;
  }
  Json rafs = Json::object();
  for (const auto& [name, values] : doc.rafs) rafs[name] = values_json(values);
  root["rafs"] = rafs;
  return root.dump(2);
}

LoadedDocument load_document(const InputDocument& doc) {
  std::vector<std::string> sorted_alts = doc.alternatives;
  std::vector<std::string> sorted_prio = doc.priority;
  std::sort(sorted_alts.begin(), sorted_alts.end());
  std::sort(sorted_prio.begin(), sorted_prio.end());
  if (std::adjacent_find(sorted_alts.begin(), sorted_alts.end()) != sorted_alts.end()) {
    bad_field("alternatives", "labels must be distinct");
  }
  if (sorted_alts != sorted_prio) {
    bad_field("priority", "must be a permutation of the alternatives");
  }

  std::optional<std::vector<Rational>> payoffs;
  if (doc.payoffs) payoffs = align(*doc.payoffs, doc.priority, "payoffs");

  LoadedDocument out;
  try {
    out.context = PriorityContext::create(doc.priority, std::move(payoffs));
  } catch (const Error& e) {
    throw Error(e.kind(), std::string("field 'payoffs': ") + e.what());
  }

  if (doc.weights) out.weights = WeightVector(align(*doc.weights, doc.priority, "weights"));

  if (doc.rafs.empty()) bad_field("rafs", "at least one RAF is required");
  for (const auto& [name, values] : doc.rafs) {
    const std::string field = "rafs." + name;
    try {
      out.rafs.push_back(make_raf(align(values, doc.priority, field), out.context));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidArgument) throw;
      throw Error(e.kind(), "field '" + field + "': " + e.what());
    }
    out.names.push_back(name);
  }
  return out;
}

InputDocument example_document() {
  InputDocument doc;
  doc.alternatives = {"$40", "$10"};
  doc.priority = {"$40", "$10"};
  doc.payoffs = InputDocument::LabelValues{{"$40", Rational(40)}, {"$10", Rational(10)}};
  doc.rafs = {
      {"A", {{"$40", Rational(1, 5)}, {"$10", Rational(4, 5)}}},
      {"B", {{"$40", Rational(1, 10)}, {"$10", Rational(9, 10)}}},
  };
  return doc;
}

}  // namespace lexraf
