// Copyright 2026 molsig authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "molsig/errors.hpp"
#include "molsig/krr.hpp"
#include "molsig/provenance.hpp"

namespace molsig {

namespace {

constexpr int kModelFormatVersion = 1;

}  // namespace

void save_model(const KrrModel& model, std::ostream& out) {
  nlohmann::json doc;
  doc["format_version"] = kModelFormatVersion;
  doc["tool"] = {{"name", std::string(kToolName)},
                 {"version", std::string(kToolVersion)}};
  doc["kernel"]["gamma"] = model.kernel.gamma;
  if (model.kernel.input_sigma) {
    doc["kernel"]["input_sigma"] = *model.kernel.input_sigma;
  }
  doc["ridge_lambda"] = model.ridge_lambda;
  doc["target_name"] = model.target_name;
  doc["energy_unit"] = to_string(model.energy_unit);
  doc["descriptor_meta"] = {{"n_max", model.descriptor.n_max},
                            {"sort_order", "descending_column_norm"},
                            {"domain", to_string(model.descriptor.domain)}};
  doc["domain_tag"] = to_string(model.training_features.domain);
  doc["feature_length"] = model.training_features.cols();

  nlohmann::json rows = nlohmann::json::array();
  for (int m = 0; m < model.training_features.rows(); ++m) {
    nlohmann::json row = nlohmann::json::array();
    for (int l = 0; l < model.training_features.cols(); ++l) {
      row.push_back(model.training_features.values(m, l));
    }
    rows.push_back(std::move(row));
  }
  doc["training_features"] = std::move(rows);

  nlohmann::json weights = nlohmann::json::array();
  for (Eigen::Index i = 0; i < model.weights.size(); ++i) {
    weights.push_back(model.weights(i));
  }
  doc["weights"] = std::move(weights);

  if (!model.training_features.labels.empty()) {
    doc["labels"] = model.training_features.labels;
  }

  out << doc.dump(1) << '\n';
}

KrrModel load_model(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("model file is not valid JSON: ") + e.what());
  }

  try {
    const int version = doc.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw IoError("unsupported model format_version " +
                    std::to_string(version) + " (this build reads version " +
                    std::to_string(kModelFormatVersion) + ")");
    }

    KrrModel model;
    const auto& kernel = doc.at("kernel");
    model.kernel.gamma = kernel.at("gamma").get<double>();
    if (kernel.contains("input_sigma")) {
      model.kernel.input_sigma = kernel.at("input_sigma").get<double>();
    }
    if (!(model.kernel.gamma > 0.0)) {
      throw IoError("model kernel gamma must be positive");
    }
    model.ridge_lambda = doc.at("ridge_lambda").get<double>();
    model.target_name = doc.at("target_name").get<std::string>();
    model.energy_unit =
        energy_unit_from_string(doc.at("energy_unit").get<std::string>());
    model.training_features.domain =
        feature_domain_from_string(doc.at("domain_tag").get<std::string>());

    const auto& meta = doc.at("descriptor_meta");
    model.descriptor.n_max = meta.at("n_max").get<int>();
    model.descriptor.domain =
        feature_domain_from_string(meta.at("domain").get<std::string>());

    const auto& rows = doc.at("training_features");
    const auto& weights = doc.at("weights");
    const int feature_length = doc.at("feature_length").get<int>();
    if (rows.size() != weights.size()) {
      throw IoError("weights length (" + std::to_string(weights.size()) +
                    ") does not match training feature rows (" +
                    std::to_string(rows.size()) + ")");
    }
    if (rows.empty()) {
      throw IoError("model has no training rows");
    }

    model.training_features.values.resize(
        static_cast<Eigen::Index>(rows.size()), feature_length);
    for (std::size_t m = 0; m < rows.size(); ++m) {
      const auto& row = rows[m];
      if (static_cast<int>(row.size()) != feature_length) {
        throw IoError("training row " + std::to_string(m) + " has length " +
                      std::to_string(row.size()) + ", expected " +
                      std::to_string(feature_length));
      }
      for (int l = 0; l < feature_length; ++l) {
        model.training_features.values(static_cast<Eigen::Index>(m), l) =
            row[static_cast<std::size_t>(l)].get<double>();
      }
    }

    model.weights.resize(static_cast<Eigen::Index>(weights.size()));
    for (std::size_t i = 0; i < weights.size(); ++i) {
      model.weights(static_cast<Eigen::Index>(i)) = weights[i].get<double>();
    }

    if (doc.contains("labels")) {
      model.training_features.labels =
          doc.at("labels").get<std::vector<std::string>>();
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed model file: ") + e.what());
  }
}

void save_model_file(const KrrModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write model file '" + path + "'");
  }
  save_model(model, out);
}

KrrModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open model file '" + path + "'");
  }
  return load_model(in);
}

}  // namespace molsig
