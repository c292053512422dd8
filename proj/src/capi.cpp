// Copyright 2026 The wshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <exception>
#include <new>
#include <string>

#include "wshift/equivalence.hpp"
#include "wshift/error.hpp"
#include "wshift/kippenhahn.hpp"
#include "wshift/numrange.hpp"
#include "wshift/reducibility.hpp"
#include "wshift/report_json.hpp"
#include "wshift/wshift.h"

struct wshift_shift {
    wshift::WeightedShift value;
};

struct wshift_report {
    int flag = 0;
    std::string json;
    std::string pretty;
};

namespace {

thread_local std::string last_error;

wshift_status status_for(wshift::ErrorKind kind) {
    using wshift::ErrorKind;
    switch (kind) {
        case ErrorKind::Dimension:
            return WSHIFT_ERR_DIMENSION;
        case ErrorKind::Validation:
            return WSHIFT_ERR_VALIDATION;
        case ErrorKind::Domain:
            return WSHIFT_ERR_DOMAIN;
        case ErrorKind::Contract:
            return WSHIFT_ERR_CONTRACT;
        case ErrorKind::Convergence:
            return WSHIFT_ERR_CONVERGENCE;
        case ErrorKind::Precondition:
            return WSHIFT_ERR_PRECONDITION;
        case ErrorKind::Size:
            return WSHIFT_ERR_SIZE;
        case ErrorKind::Regime:
            return WSHIFT_ERR_REGIME;
    }
    return WSHIFT_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
wshift_status guarded(F &&body) {
    try {
        body();
        return WSHIFT_OK;
    } catch (const wshift::Error &e) {
        last_error = e.what();
        return status_for(e.kind());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return WSHIFT_ERR_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return WSHIFT_ERR_INTERNAL;
    }
}

wshift_status null_argument(const char *fn) {
    last_error = std::string(fn) + ": null argument";
    return WSHIFT_ERR_NULL_ARGUMENT;
}

double resolve_tol(double tol) { return tol < 0.0 ? wshift::kDefaultTol : tol; }

wshift_report *make_report(int flag, const wshift::json::Json &doc) {
    return new wshift_report{flag, doc.dump(), doc.dump(2)};
}

}  // namespace

extern "C" {

const char *wshift_status_string(wshift_status status) {
    switch (status) {
        case WSHIFT_OK:
            return "ok";
        case WSHIFT_ERR_DIMENSION:
            return "dimension error";
        case WSHIFT_ERR_VALIDATION:
            return "validation error";
        case WSHIFT_ERR_DOMAIN:
            return "domain error";
        case WSHIFT_ERR_CONTRACT:
            return "contract error";
        case WSHIFT_ERR_CONVERGENCE:
            return "convergence error";
        case WSHIFT_ERR_PRECONDITION:
            return "precondition error";
        case WSHIFT_ERR_SIZE:
            return "size error";
        case WSHIFT_ERR_REGIME:
            return "regime error";
        case WSHIFT_ERR_NULL_ARGUMENT:
            return "null argument";
        case WSHIFT_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *wshift_last_error(void) { return last_error.c_str(); }

wshift_status wshift_shift_create(const double *re, const double *im, size_t n, wshift_shift **out) {
    if (re == nullptr || out == nullptr) return null_argument("wshift_shift_create");
    *out = nullptr;
    return guarded([&] {
        std::vector<wshift::Complex> w(n);
        for (size_t i = 0; i < n; ++i) w[i] = {re[i], im != nullptr ? im[i] : 0.0};
        *out = new wshift_shift{wshift::make_shift(std::move(w))};
    });
}

void wshift_shift_destroy(wshift_shift *shift) { delete shift; }

size_t wshift_shift_size(const wshift_shift *shift) { return shift != nullptr ? shift->value.size() : 0; }

wshift_status wshift_shift_weight(const wshift_shift *shift, int64_t j, double *re, double *im) {
    if (shift == nullptr || re == nullptr || im == nullptr) return null_argument("wshift_shift_weight");
    const auto w = shift->value.weight(j);
    *re = w.real();
    *im = w.imag();
    return WSHIFT_OK;
}

wshift_status wshift_shift_rotate(const wshift_shift *shift, int64_t k, wshift_shift **out) {
    if (shift == nullptr || out == nullptr) return null_argument("wshift_shift_rotate");
    *out = nullptr;
    return guarded([&] { *out = new wshift_shift{shift->value.rotate(k)}; });
}

wshift_status wshift_shift_to_matrix(const wshift_shift *shift, double *re, double *im) {
    if (shift == nullptr || re == nullptr || im == nullptr) return null_argument("wshift_shift_to_matrix");
    return guarded([&] {
        const auto m = wshift::to_matrix(shift->value);
        const auto e = m.entries();
        for (size_t i = 0; i < e.size(); ++i) {
            re[i] = e[i].real();
            im[i] = e[i].imag();
        }
    });
}

wshift_status wshift_circ_sym(const double *inputs, size_t n, int r, double *out) {
    if ((inputs == nullptr && n > 0) || out == nullptr) return null_argument("wshift_circ_sym");
    return guarded([&] { *out = wshift::circ_sym(std::span<const double>(inputs, n), r); });
}

wshift_status wshift_kippenhahn_eval(const wshift_shift *shift, double x, double y, double z, double *out) {
    if (shift == nullptr || out == nullptr) return null_argument("wshift_kippenhahn_eval");
    return guarded([&] { *out = wshift::eval_kippenhahn(wshift::kippenhahn_poly(shift->value), x, y, z); });
}

wshift_status wshift_kippenhahn_oracle(const wshift_shift *shift, double x, double y, double z, double *out) {
    if (shift == nullptr || out == nullptr) return null_argument("wshift_kippenhahn_oracle");
    return guarded([&] { *out = wshift::kippenhahn_oracle(shift->value, x, y, z); });
}

wshift_status wshift_support_function(const wshift_shift *shift, double theta, double *out) {
    if (shift == nullptr || out == nullptr) return null_argument("wshift_support_function");
    return guarded([&] { *out = wshift::support_function(shift->value, theta); });
}

wshift_status wshift_check_equivalent(const wshift_shift *a, const wshift_shift *b, double tol,
                                      int want_witness, wshift_report **out) {
    if (a == nullptr || b == nullptr || out == nullptr) return null_argument("wshift_check_equivalent");
    *out = nullptr;
    return guarded([&] {
        const auto r = wshift::check_equivalent(a->value, b->value, resolve_tol(tol), want_witness != 0);
        *out = make_report(r.equivalent ? 1 : 0, wshift::json::to_json(r));
    });
}

wshift_status wshift_reduce(const wshift_shift *shift, double tol, wshift_report **out) {
    if (shift == nullptr || out == nullptr) return null_argument("wshift_reduce");
    *out = nullptr;
    return guarded([&] {
        const double t = resolve_tol(tol);
        auto r = wshift::is_reducible(shift->value, t);
        if (r.reducible) r = wshift::decompose(shift->value, t);
        *out = make_report(r.reducible ? 1 : 0, wshift::json::to_json(r));
    });
}

wshift_status wshift_kippenhahn(const wshift_shift *shift, wshift_report **out) {
    if (shift == nullptr || out == nullptr) return null_argument("wshift_kippenhahn");
    *out = nullptr;
    return guarded([&] { *out = make_report(1, wshift::json::to_json(wshift::kippenhahn_poly(shift->value))); });
}

wshift_status wshift_ranges_equal(const wshift_shift *a, const wshift_shift *b, double tol,
                                  wshift_report **out) {
    if (a == nullptr || b == nullptr || out == nullptr) return null_argument("wshift_ranges_equal");
    *out = nullptr;
    return guarded([&] {
        const auto doc = wshift::json::range_equality_report(a->value, b->value, resolve_tol(tol));
        *out = make_report(doc["equal"].get<bool>() ? 1 : 0, doc);
    });
}

wshift_status wshift_boundary(const wshift_shift *shift, size_t m, wshift_report **out) {
    if (shift == nullptr || out == nullptr) return null_argument("wshift_boundary");
    *out = nullptr;
    return guarded([&] { *out = make_report(1, wshift::json::to_json(wshift::boundary_samples(shift->value, m))); });
}

wshift_status wshift_analyze(const wshift_shift *shift, double tol, wshift_report **out) {
    if (shift == nullptr || out == nullptr) return null_argument("wshift_analyze");
    *out = nullptr;
    return guarded([&] {
        const auto doc = wshift::json::analyze_report(shift->value, resolve_tol(tol));
        *out = make_report(doc["reducibility"]["reducible"].get<bool>() ? 1 : 0, doc);
    });
}

void wshift_report_destroy(wshift_report *report) { delete report; }

int wshift_report_flag(const wshift_report *report) { return report != nullptr ? report->flag : 0; }

const char *wshift_report_json(const wshift_report *report) {
    return report != nullptr ? report->json.c_str() : "";
}

const char *wshift_report_json_pretty(const wshift_report *report) {
    return report != nullptr ? report->pretty.c_str() : "";
}

}  // extern "C"
