#include <saito/arrangement.hpp>

#include <json.hpp>

#include <sstream>

namespace saito {

Arrangement::Arrangement(std::size_t nvars, unsigned field_order, std::vector<std::vector<Scalar>> forms)
    : nvars_(nvars), field_order_(field_order) {
    if (nvars == 0 || nvars > kMaxVariables)
        throw InputError("number of variables must be between 1 and " + std::to_string(kMaxVariables));
    CyclotomicField::get(field_order);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        auto& f = forms[i];
        if (f.size() != nvars)
            throw InputError("form " + std::to_string(i + 1) + " has " + std::to_string(f.size()) +
                             " coefficients, expected " + std::to_string(nvars));
        std::size_t last = nvars;
        for (std::size_t k = nvars; k-- > 0;)
            if (!f[k].is_zero()) {
                last = k;
                break;
            }
        if (last == nvars) throw InputError("form " + std::to_string(i + 1) + " is zero");
        Scalar inv = f[last].inverse();
        for (auto& c : f) c *= inv;
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            if (coeffs_[j] == f)
                throw InputError("forms " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                 " proportional");
        Polynomial p(nvars);
        for (std::size_t k = 0; k < nvars; ++k) p += Polynomial::term(nvars, Monomial::variable(k), f[k]);
        coeffs_.push_back(f);
        forms_.push_back(std::move(p));
    }
}

Polynomial Arrangement::defining_polynomial() const {
    Polynomial q(nvars_, Scalar(1));
    for (const auto& f : forms_) q *= f;
    return q;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::braid: return "braid";
        case Family::braid_deleted: return "braid-deleted";
        case Family::wreath: return "wreath";
        case Family::custom: return "custom";
    }
    return "custom";
}

Family parse_family(const std::string& name) {
    if (name == "braid") return Family::braid;
    if (name == "braid-deleted" || name == "braid_deleted") return Family::braid_deleted;
    if (name == "wreath") return Family::wreath;
    throw InputError("unknown family '" + name + "'");
}

std::string describe(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::braid: return "B_" + std::to_string(spec.n);
        case Family::braid_deleted: return "Bdel_" + std::to_string(spec.n);
        case Family::wreath: return "A_" + std::to_string(spec.r) + "^" + std::to_string(spec.n);
        case Family::custom: return "custom";
    }
    return "custom";
}

DerivationBasis::DerivationBasis(std::vector<Derivation> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.empty()) throw InputError("empty derivation basis");
    const std::size_t n = alphas_.front().nvars();
    if (alphas_.size() != n)
        throw InputError("basis has " + std::to_string(alphas_.size()) + " derivations for " +
                         std::to_string(n) + " variables");
    graded_ = true;
    for (const auto& a : alphas_) {
        if (a.nvars() != n) throw InputError("basis derivations live in different rings");
        auto w = derivation_weight(a);
        if (!w || a.is_zero()) {
            graded_ = false;
            weights_.clear();
            break;
        }
        weights_.push_back(*w);
    }
}

const std::vector<int>& DerivationBasis::weights() const {
    if (!graded_) throw std::logic_error("derivation basis is not homogeneous");
    return weights_;
}

namespace {

Polynomial var(std::size_t n, std::size_t k, unsigned e = 1) { return Polynomial::variable(n, k, e); }

std::vector<Scalar> unit_form(std::size_t n, std::size_t k) {
    std::vector<Scalar> f(n, Scalar(0));
    f[k] = Scalar(1);
    return f;
}

// x_j - c x_i
std::vector<Scalar> difference_form(std::size_t n, std::size_t i, std::size_t j, const Scalar& c) {
    std::vector<Scalar> f(n, Scalar(0));
    f[i] = -c;
    f[j] = Scalar(1);
    return f;
}

// alpha_m(x_k) = x_k prod_{i<m} (x_k^r - x_i^r)
DerivationBasis wreath_alpha_basis(unsigned r, std::size_t n) {
    std::vector<Derivation> alphas;
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<Polynomial> comps;
        for (std::size_t k = 0; k < n; ++k) {
            Polynomial c = var(n, k);
            for (std::size_t i = 0; i < m; ++i) c *= var(n, k, r) - var(n, i, r);
            comps.push_back(std::move(c));
        }
        alphas.emplace_back(std::move(comps));
    }
    return DerivationBasis(std::move(alphas));
}

}  // namespace

DerivationBasis wreath_theta_basis(unsigned r, std::size_t n) {
    std::vector<Derivation> thetas;
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<Polynomial> comps;
        for (std::size_t k = 0; k < n; ++k) comps.push_back(var(n, k, static_cast<unsigned>(m * r + 1)));
        thetas.emplace_back(std::move(comps));
    }
    return DerivationBasis(std::move(thetas));
}

FreeArrangement build_family(const FamilySpec& spec) {
    const std::size_t n = spec.n;
    if (n == 0 || n > kMaxVariables) throw InputError("n must be between 1 and " + std::to_string(kMaxVariables));
    std::vector<std::vector<Scalar>> forms;
    switch (spec.family) {
        case Family::braid: {
            if (n < 2) throw InputError("braid arrangement needs n >= 2");
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) forms.push_back(difference_form(n, i, j, Scalar(1)));
            // theta_i(x_k) = prod_{j<i} (x_k - x_j)
            std::vector<Derivation> thetas;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Polynomial> comps;
                for (std::size_t k = 0; k < n; ++k) {
                    Polynomial c(n, Scalar(1));
                    for (std::size_t j = 0; j < i; ++j) c *= var(n, k) - var(n, j);
                    comps.push_back(std::move(c));
                }
                thetas.emplace_back(std::move(comps));
            }
            return {spec, Arrangement(n, 1, std::move(forms)), DerivationBasis(std::move(thetas))};
        }
        case Family::braid_deleted: {
            for (std::size_t k = 0; k < n; ++k) forms.push_back(unit_form(n, k));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) forms.push_back(difference_form(n, i, j, Scalar(1)));
            return {spec, Arrangement(n, 1, std::move(forms)), wreath_alpha_basis(1, n)};
        }
        case Family::wreath: {
            if (spec.r == 0 || spec.r > kMaxCyclotomicOrder)
                throw InputError("r must be between 1 and " + std::to_string(kMaxCyclotomicOrder));
            for (std::size_t k = 0; k < n; ++k) forms.push_back(unit_form(n, k));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (unsigned m = 0; m < spec.r; ++m)
                        forms.push_back(difference_form(n, i, j, Scalar::zeta_power(spec.r, m)));
            return {spec, Arrangement(n, spec.r, std::move(forms)), wreath_alpha_basis(spec.r, n)};
        }
        case Family::custom: break;
    }
    throw InputError("custom arrangements are loaded from a file");
}

PolyMatrix saito_matrix(const DerivationBasis& basis) {
    PolyMatrix m;
    for (const auto& a : basis.derivations()) m.push_back(a.components());
    return m;
}

SaitoResult check_saito_criterion(const Arrangement& a, const DerivationBasis& basis) {
    if (basis.nvars() != a.nvars()) throw InputError("basis and arrangement live in different rings");
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t h = 0; h < a.size(); ++h) {
            const Polynomial& f = a.forms()[h];
            if (!try_exact_div(apply(basis[i], f), f))
                throw TangencyViolation("derivation " + std::to_string(i + 1) + " is not tangent to form " +
                                            std::to_string(h + 1) + " (" + to_string(f) + ")",
                                        i, h);
        }
    SaitoResult res;
    res.determinant = determinant(saito_matrix(basis));
    res.defining_polynomial = a.defining_polynomial();
    const auto& q = res.defining_polynomial;
    if (res.determinant.is_zero()) return res;
    res.constant = res.determinant.leading_coefficient() / q.leading_coefficient();
    res.holds = res.determinant == q * res.constant;
    return res;
}

// ---------------------------------------------------------------- JSON

namespace {

using nlohmann::json;

std::string line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string entry_text(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InputError(where + ": expected a string or an integer");
}

Polynomial parse_entry(const json& v, std::size_t n, unsigned order, const std::string& where) {
    std::string s = entry_text(v, where);
    try {
        return parse_polynomial(s, n, order);
    } catch (const ParseError& e) {
        throw InputError(where + ": " + e.what() + " in \"" + s + "\"");
    }
}

}  // namespace

LoadedArrangement load_arrangement_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON at " + line_column(text, e.byte ? e.byte - 1 : 0) + ": " +
                         std::string(e.what()));
    }
    if (!doc.is_object()) throw InputError("top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_unsigned()) throw InputError("\"n\" must be a positive integer");
    const auto n = doc["n"].get<std::size_t>();
    if (n == 0 || n > kMaxVariables) throw InputError("\"n\" must be between 1 and " + std::to_string(kMaxVariables));
    unsigned order = 1;
    if (doc.contains("field")) {
        const auto& f = doc["field"];
        if (f.is_string()) {
            if (f.get<std::string>() != "Q") throw InputError("\"field\" must be \"Q\" or {\"cyclotomic\": r}");
        } else if (f.is_object() && f.contains("cyclotomic") && f["cyclotomic"].is_number_unsigned()) {
            order = f["cyclotomic"].get<unsigned>();
            if (order == 0 || order > kMaxCyclotomicOrder)
                throw InputError("cyclotomic order must be between 1 and " + std::to_string(kMaxCyclotomicOrder));
        } else {
            throw InputError("\"field\" must be \"Q\" or {\"cyclotomic\": r}");
        }
    }
    if (!doc.contains("forms") || !doc["forms"].is_array()) throw InputError("\"forms\" must be an array");
    std::vector<std::vector<Scalar>> forms;
    for (std::size_t i = 0; i < doc["forms"].size(); ++i) {
        const auto& row = doc["forms"][i];
        const std::string where = "forms[" + std::to_string(i) + "]";
        if (!row.is_array()) throw InputError(where + ": expected an array of coefficients");
        std::vector<Scalar> coeffs;
        for (std::size_t k = 0; k < row.size(); ++k) {
            const std::string w = where + "[" + std::to_string(k) + "]";
            Polynomial p = parse_entry(row[k], 0, order, w);
            coeffs.push_back(p.is_zero() ? Scalar(0) : p.leading_coefficient());
        }
        forms.push_back(std::move(coeffs));
    }
    LoadedArrangement out{Arrangement(n, order, std::move(forms)), std::nullopt};
    if (doc.contains("basis")) {
        const auto& b = doc["basis"];
        if (!b.is_array()) throw InputError("\"basis\" must be an array");
        std::vector<Derivation> ds;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::string where = "basis[" + std::to_string(i) + "]";
            if (!b[i].is_array() || b[i].size() != n)
                throw InputError(where + ": expected " + std::to_string(n) + " polynomials");
            std::vector<Polynomial> comps;
            for (std::size_t k = 0; k < n; ++k)
                comps.push_back(parse_entry(b[i][k], n, order, where + "[" + std::to_string(k) + "]"));
            ds.emplace_back(std::move(comps));
        }
        out.basis = DerivationBasis(std::move(ds));
    }
    return out;
}

std::string arrangement_to_json(const Arrangement& a, const DerivationBasis* basis) {
    json doc;
    doc["n"] = a.nvars();
    if (a.field_order() <= 2) {
        doc["field"] = "Q";
    } else {
        doc["field"] = {{"cyclotomic", a.field_order()}};
    }
    json forms = json::array();
    for (const auto& f : a.coefficients()) {
        json row = json::array();
        for (const auto& c : f) row.push_back(to_string(Polynomial(0, c)));
        forms.push_back(row);
    }
    doc["forms"] = forms;
    if (basis) {
        json b = json::array();
        for (const auto& d : basis->derivations()) {
            json row = json::array();
            for (const auto& c : d.components()) row.push_back(to_string(c));
            b.push_back(row);
        }
        doc["basis"] = b;
    }
    return doc.dump(2);
}

}  // namespace saito
