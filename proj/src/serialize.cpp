// Copyright 2026 The DiaQ Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diaq/serialize.hpp"

#include <string>

#include "diaq/error.hpp"

namespace diaq {

template <class T> nlohmann::json to_json(const DiaqMatrix<T> &a) {
    nlohmann::json diags = nlohmann::json::object();
    for (const auto &[d, diag] : a.diagonals()) {
        nlohmann::json values = nlohmann::json::array();
        for (std::size_t k = 0; k < diag.size(); ++k) {
            values.push_back({diag.values.re[k], diag.values.im[k]});
        }
        diags[std::to_string(d)] = std::move(values);
    }
    return {{"n", a.n_dim()}, {"diags", std::move(diags)}};
}

template <class T> DiaqMatrix<T> matrix_from_json(const nlohmann::json &j) {
    try {
        DiaqMatrix<T> out(j.at("n").get<std::size_t>());
        for (const auto &[key, values] : j.at("diags").items()) {
            const DiagIndex d = std::stoll(key);
            Diagonal<T> diag(d, out.n_dim());
            if (values.size() != diag.size()) {
                throw ShapeError("diagonal " + key + " must hold " +
                                 std::to_string(diag.size()) + " values");
            }
            for (std::size_t k = 0; k < diag.size(); ++k) {
                diag.values.re[k] = values[k].at(0).template get<T>();
                diag.values.im[k] = values[k].at(1).template get<T>();
            }
            out.insert(std::move(diag));
        }
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw ShapeError(std::string("malformed matrix JSON: ") + e.what());
    }
}

template nlohmann::json to_json(const DiaqMatrix<float> &);
template nlohmann::json to_json(const DiaqMatrix<double> &);
template DiaqMatrix<float> matrix_from_json<float>(const nlohmann::json &);
template DiaqMatrix<double> matrix_from_json<double>(const nlohmann::json &);

} // namespace diaq
