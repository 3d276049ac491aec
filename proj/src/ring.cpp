#include "schfin/ring.hpp"

#include "schfin/errors.hpp"
#include "schfin/parse.hpp"

#include <algorithm>
#include <set>

namespace schfin {

RingPtr PresentedRing::make(std::vector<std::string> vars, std::vector<Polynomial> relations) {
    auto ring = std::shared_ptr<PresentedRing>(new PresentedRing());
    std::set<std::string> seen;
    for (const std::string& v : vars)
        if (!seen.insert(v).second) fail(Errc::construction, "duplicate ring variable '" + v + "'");
    const int n = static_cast<int>(vars.size());
    ring->vars_ = std::move(vars);
    ring->relations_ = Ideal(n, std::move(relations));
    ring->gb_ = buchberger(ring->relations_, TermOrder::degrevlex());
    return ring;
}

int PresentedRing::var_index(std::string_view name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[static_cast<std::size_t>(i)] == name) return i;
    throw Error(Errc::element_not_found, "unknown ring variable '" + std::string(name) + "'");
}

Polynomial PresentedRing::reduce(const Polynomial& f) const {
    if (f.nvars() != nvars()) fail(Errc::internal, "reduce: ambient mismatch");
    return normal_form(f, gb_, TermOrder::degrevlex());
}

bool PresentedRing::contains(const Polynomial& f, std::span<const Polynomial> extra) const {
    std::vector<Polynomial> gens = relations_.gens;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return ideal_membership(f, Ideal(nvars(), std::move(gens)));
}

bool PresentedRing::radical_contains(const Polynomial& f, std::span<const Polynomial> extra) const {
    std::vector<Polynomial> gens = relations_.gens;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return radical_membership(f, Ideal(nvars(), std::move(gens)));
}

Polynomial PresentedRing::parse(std::string_view text) const {
    return parse_polynomial(text, vars_);
}

std::string PresentedRing::describe() const {
    std::string out = "Q[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) out += ",";
        out += vars_[i];
    }
    out += "]";
    if (!relations_.gens.empty()) {
        out += "/(";
        for (std::size_t i = 0; i < relations_.gens.size(); ++i) {
            if (i) out += ", ";
            out += relations_.gens[i].to_string(vars_);
        }
        out += ")";
    }
    return out;
}

RingMap RingMap::make(RingPtr source, RingPtr target, std::vector<Polynomial> images,
                      std::optional<LocalizationCertificate> certificate) {
    if (static_cast<int>(images.size()) != source->nvars())
        fail(Errc::construction, "ring map needs one image per source variable");
    RingMap m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.images_.reserve(images.size());
    for (Polynomial& p : images) {
        if (p.nvars() != m.target_->nvars()) fail(Errc::construction, "ring map image ambient mismatch");
        m.images_.push_back(m.target_->reduce(p));
    }
    for (const Polynomial& rel : m.source_->relations().gens) {
        Polynomial img = substitute(rel, m.images_, m.target_->nvars());
        if (!m.target_->is_zero(img))
            fail(Errc::construction, "ring map does not kill source relation " +
                                         rel.to_string(m.source_->vars()));
    }
    m.certificate_ = std::move(certificate);
    if (m.certificate_) {
        if (m.certificate_->sections.size() != static_cast<std::size_t>(m.target_->nvars()))
            fail(Errc::construction, "certificate needs one section per target variable");
        if (m.certificate_->witness.nvars() != m.source_->nvars() ||
            m.certificate_->inverse.nvars() != m.target_->nvars())
            fail(Errc::construction, "certificate ambient mismatch");
    }
    return m;
}

RingMap RingMap::identity(const RingPtr& ring) {
    std::vector<Polynomial> imgs;
    for (int i = 0; i < ring->nvars(); ++i) imgs.push_back(Polynomial::variable(ring->nvars(), i));
    LocalizationCertificate cert;
    cert.witness = Polynomial::constant(ring->nvars(), 1);
    cert.inverse = Polynomial::constant(ring->nvars(), 1);
    for (int i = 0; i < ring->nvars(); ++i)
        cert.sections.push_back({Polynomial::variable(ring->nvars(), i), 0});
    return make(ring, ring, std::move(imgs), std::move(cert));
}

Polynomial RingMap::apply(const Polynomial& f) const {
    if (f.nvars() != source_->nvars()) fail(Errc::internal, "apply: ambient mismatch");
    return target_->reduce(substitute(f, images_, target_->nvars()));
}

RingMap RingMap::with_certificate(LocalizationCertificate cert) const {
    return make(source_, target_, images_, std::move(cert));
}

RingMap RingMap::without_certificate() const { return make(source_, target_, images_); }

bool ring_map_equal(const RingMap& a, const RingMap& b) {
    if (a.source()->nvars() != b.source()->nvars()) return false;
    if (a.target().get() != b.target().get() && a.target()->vars() != b.target()->vars()) return false;
    for (int i = 0; i < a.source()->nvars(); ++i)
        if (!a.target()->equal(a.images()[static_cast<std::size_t>(i)],
                               b.images()[static_cast<std::size_t>(i)]))
            return false;
    return true;
}

RingMap compose_maps(const RingMap& first, const RingMap& then) {
    std::vector<Polynomial> imgs;
    imgs.reserve(first.images().size());
    for (const Polynomial& p : first.images()) imgs.push_back(then.apply(p));
    return RingMap::make(first.source(), then.target(), std::move(imgs));
}

namespace {

// Fresh variable names for joint ambients: name, then name_2, name_3, ...
std::string fresh_name(const std::string& base, std::set<std::string>& taken) {
    if (taken.insert(base).second) return base;
    for (int k = 2;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (taken.insert(cand).second) return cand;
    }
}

// Joint ambient with target variables first, then (renamed) source variables.
// Returns: all names, remap of target vars, remap of source vars.
struct JointAmbient {
    std::vector<std::string> names;
    std::vector<int> target_slot; // per target var
    std::vector<int> source_slot; // per source var
};

JointAmbient joint_ambient(const RingMap& map) {
    JointAmbient j;
    std::set<std::string> taken;
    for (const std::string& v : map.target()->vars()) {
        j.target_slot.push_back(static_cast<int>(j.names.size()));
        j.names.push_back(fresh_name(v, taken));
    }
    for (const std::string& v : map.source()->vars()) {
        j.source_slot.push_back(static_cast<int>(j.names.size()));
        j.names.push_back(fresh_name(v, taken));
    }
    return j;
}

// Graph ideal: target relations, source relations, and source_var - image.
Ideal graph_ideal(const RingMap& map, const JointAmbient& j) {
    const int n = static_cast<int>(j.names.size());
    std::vector<Polynomial> gens;
    for (const Polynomial& r : map.target()->relations().gens) gens.push_back(r.remap(n, j.target_slot));
    for (const Polynomial& r : map.source()->relations().gens) gens.push_back(r.remap(n, j.source_slot));
    for (int i = 0; i < map.source()->nvars(); ++i) {
        Polynomial lhs = Polynomial::variable(n, j.source_slot[static_cast<std::size_t>(i)]);
        Polynomial rhs = map.images()[static_cast<std::size_t>(i)].remap(n, j.target_slot);
        gens.push_back(lhs - rhs);
    }
    return Ideal(n, std::move(gens));
}

} // namespace

Ideal map_kernel(const RingMap& map) {
    JointAmbient j = joint_ambient(map);
    const int n = static_cast<int>(j.names.size());
    Ideal graph = graph_ideal(map, j);
    std::vector<bool> keep(static_cast<std::size_t>(n), false);
    for (int slot : j.source_slot) keep[static_cast<std::size_t>(slot)] = true;
    Ideal elim = elimination_ideal(graph, keep);
    // Back to the source ambient, reduced mod source relations.
    std::vector<int> back(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < map.source()->nvars(); ++i)
        back[static_cast<std::size_t>(j.source_slot[static_cast<std::size_t>(i)])] = i;
    std::vector<Polynomial> gens;
    for (const Polynomial& p : elim.gens) {
        Polynomial q = map.source()->reduce(p.remap(map.source()->nvars(), back));
        if (!q.is_zero()) gens.push_back(q);
    }
    return Ideal(map.source()->nvars(), std::move(gens));
}

ImageExpressor::ImageExpressor(const RingMap& map) : map_(&map) {
    JointAmbient j = joint_ambient(map);
    joint_nvars_ = static_cast<int>(j.names.size());
    target_slot_ = j.target_slot;
    source_slot_ = j.source_slot;
    std::vector<bool> dominant(static_cast<std::size_t>(joint_nvars_), false);
    for (int slot : target_slot_) dominant[static_cast<std::size_t>(slot)] = true;
    ord_ = TermOrder::block(dominant);
    gb_ = buchberger(graph_ideal(map, j), ord_);
    source_only_.assign(static_cast<std::size_t>(joint_nvars_), true);
    for (int slot : target_slot_) source_only_[static_cast<std::size_t>(slot)] = false;
    back_.assign(static_cast<std::size_t>(joint_nvars_), -1);
    for (int i = 0; i < map.source()->nvars(); ++i)
        back_[static_cast<std::size_t>(source_slot_[static_cast<std::size_t>(i)])] = i;
}

std::optional<Polynomial> ImageExpressor::express(const Polynomial& target_element) const {
    Polynomial lifted = target_element.remap(joint_nvars_, target_slot_);
    Polynomial nf = normal_form(lifted, gb_, ord_);
    if (!nf.supported_on(source_only_)) return std::nullopt;
    return map_->source()->reduce(nf.remap(map_->source()->nvars(), back_));
}

bool is_surjective(const RingMap& map) {
    ImageExpressor ex(map);
    for (int t = 0; t < map.target()->nvars(); ++t)
        if (!ex.express(Polynomial::variable(map.target()->nvars(), t))) return false;
    return true;
}

std::optional<Polynomial> unit_inverse(const RingPtr& ring, const Polynomial& element) {
    const int n = ring->nvars();
    std::vector<int> widen(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) widen[static_cast<std::size_t>(i)] = i;
    std::vector<Polynomial> gens;
    for (const Polynomial& r : ring->relations().gens) gens.push_back(r.remap(n + 1, widen));
    Polynomial z = Polynomial::variable(n + 1, n);
    gens.push_back(z * element.remap(n + 1, widen) - Polynomial::constant(n + 1, 1));
    std::vector<bool> dominant(static_cast<std::size_t>(n) + 1, false);
    dominant[static_cast<std::size_t>(n)] = true;
    TermOrder ord = TermOrder::block(dominant);
    auto gb = buchberger(Ideal(n + 1, std::move(gens)), ord);
    if (is_unit_ideal(gb)) return std::nullopt; // element was a zero divisor killing the ring
    Polynomial nf = normal_form(z, gb, ord);
    std::vector<bool> z_free(static_cast<std::size_t>(n) + 1, true);
    z_free[static_cast<std::size_t>(n)] = false;
    if (!nf.supported_on(z_free)) return std::nullopt;
    std::vector<int> back(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i) back[static_cast<std::size_t>(i)] = i;
    return ring->reduce(nf.remap(n, back));
}

bool is_isomorphism(const RingMap& map) {
    return map_kernel(map).gens.empty() && is_surjective(map);
}

Localization localize(const RingPtr& ring, const Polynomial& element, const std::string& var_hint) {
    if (ring->is_zero(element))
        fail(Errc::degenerate_localization, "localization at zero is refused");
    std::set<std::string> taken(ring->vars().begin(), ring->vars().end());
    std::string wname = fresh_name(var_hint, taken);
    const int n = ring->nvars();
    std::vector<std::string> vars = ring->vars();
    vars.push_back(wname);
    std::vector<int> widen(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) widen[static_cast<std::size_t>(i)] = i;
    std::vector<Polynomial> rels;
    for (const Polynomial& r : ring->relations().gens) rels.push_back(r.remap(n + 1, widen));
    Polynomial w = Polynomial::variable(n + 1, n);
    rels.push_back(w * element.remap(n + 1, widen) - Polynomial::constant(n + 1, 1));
    RingPtr loc = PresentedRing::make(std::move(vars), std::move(rels));
    if (loc->is_zero_ring())
        fail(Errc::degenerate_localization,
             "localization at '" + element.to_string(ring->vars()) + "' collapses to the zero ring");
    std::vector<Polynomial> imgs;
    for (int i = 0; i < n; ++i) imgs.push_back(Polynomial::variable(n + 1, i));
    LocalizationCertificate cert;
    cert.witness = element;
    cert.inverse = w;
    for (int i = 0; i < n; ++i) cert.sections.push_back({Polynomial::variable(n, i), 0});
    cert.sections.push_back({Polynomial::constant(n, 1), 1});
    Localization out;
    out.map = RingMap::make(ring, loc, std::move(imgs), std::move(cert));
    out.ring = std::move(loc);
    return out;
}

std::optional<std::string> verify_certificate(const RingMap& map) {
    if (!map.certified()) return "no certificate attached";
    const LocalizationCertificate& cert = *map.certificate();
    const RingPtr& A = map.source();
    const RingPtr& B = map.target();

    // inverse * phi(witness) = 1 in the target.
    Polynomial wit_img = map.apply(cert.witness);
    if (!B->equal(cert.inverse * wit_img, Polynomial::constant(B->nvars(), 1)))
        return "declared inverse does not invert the witness image";

    // Canonical comparison A[w]/(w*s - 1) -> B, w -> inverse.
    Localization loc = [&]() -> Localization {
        try {
            return localize(A, cert.witness);
        } catch (const Error& e) {
            throw Error(e.code(), std::string("certificate witness is degenerate: ") + e.what());
        }
    }();
    const int m = loc.ring->nvars(); // A-vars + w
    std::vector<Polynomial> comparison_images;
    for (const Polynomial& img : map.images()) comparison_images.push_back(img);
    comparison_images.push_back(cert.inverse);
    RingMap comparison;
    try {
        comparison = RingMap::make(loc.ring, B, std::move(comparison_images));
    } catch (const Error& e) {
        return std::string("comparison map ill-defined: ") + e.what();
    }
    (void)m;

    // Surjectivity via the sections: target var = phi(num) * inverse^power.
    for (int t = 0; t < B->nvars(); ++t) {
        const auto& sec = cert.sections[static_cast<std::size_t>(t)];
        if (sec.numerator.nvars() != A->nvars()) return "section numerator ambient mismatch";
        if (sec.witness_power < 0) return "negative witness power in section";
        Polynomial rhs = map.apply(sec.numerator) * cert.inverse.pow(sec.witness_power);
        if (!B->equal(Polynomial::variable(B->nvars(), t), rhs))
            return "section for target variable '" + B->vars()[static_cast<std::size_t>(t)] +
                   "' does not reproduce it";
    }

    // Injectivity: the comparison kernel must vanish.
    Ideal ker = map_kernel(comparison);
    if (!ker.gens.empty())
        return "comparison map has nonzero kernel (" +
               ker.gens.front().to_string(loc.ring->vars()) + ")";
    return std::nullopt;
}

TensorProduct tensor_product(const RingMap& left, const RingMap& right) {
    if (left.source().get() != right.source().get() &&
        left.source()->vars() != right.source()->vars())
        fail(Errc::construction, "tensor product requires a common source");

    const RingPtr& A = left.target();
    const RingPtr& B = right.target();
    std::set<std::string> taken;
    std::vector<std::string> names;
    std::vector<int> a_slot, b_slot;
    for (const std::string& v : A->vars()) {
        a_slot.push_back(static_cast<int>(names.size()));
        names.push_back(fresh_name(v, taken));
    }
    for (const std::string& v : B->vars()) {
        b_slot.push_back(static_cast<int>(names.size()));
        names.push_back(fresh_name(v, taken));
    }
    const int n = static_cast<int>(names.size());
    std::vector<Polynomial> rels;
    for (const Polynomial& r : A->relations().gens) rels.push_back(r.remap(n, a_slot));
    for (const Polynomial& r : B->relations().gens) rels.push_back(r.remap(n, b_slot));
    for (int i = 0; i < left.source()->nvars(); ++i) {
        Polynomial via_a = left.images()[static_cast<std::size_t>(i)].remap(n, a_slot);
        Polynomial via_b = right.images()[static_cast<std::size_t>(i)].remap(n, b_slot);
        rels.push_back(via_a - via_b);
    }
    TensorProduct out;
    out.ring = PresentedRing::make(std::move(names), std::move(rels));
    std::vector<Polynomial> a_imgs, b_imgs;
    for (int i = 0; i < A->nvars(); ++i)
        a_imgs.push_back(Polynomial::variable(n, a_slot[static_cast<std::size_t>(i)]));
    for (int i = 0; i < B->nvars(); ++i)
        b_imgs.push_back(Polynomial::variable(n, b_slot[static_cast<std::size_t>(i)]));
    out.from_left = RingMap::make(A, out.ring, std::move(a_imgs));
    out.from_right = RingMap::make(B, out.ring, std::move(b_imgs));
    return out;
}

Polynomial pull_back_numerator(const RingMap& map, const Polynomial& target_element) {
    if (!map.certified())
        fail(Errc::certificate_required, "pulling back through an uncertified map");
    const LocalizationCertificate& cert = *map.certificate();
    const RingPtr& A = map.source();
    const int n = A->nvars();
    if (target_element.nvars() != map.target()->nvars())
        fail(Errc::internal, "pull back: ambient mismatch");

    // Substitute sections num_i / s^{k_i} for each target variable and clear
    // the common denominator; only the numerator matters for witnesses.
    Polynomial num_acc(n);
    int common_power = 0;
    for (const Term& t : target_element.terms()) {
        Polynomial term_num = Polynomial::constant(n, t.coeff);
        int term_power = 0;
        for (std::size_t v = 0; v < t.mono.exps.size(); ++v) {
            int e = t.mono.exps[v];
            if (e == 0) continue;
            const auto& sec = cert.sections[v];
            term_num = term_num * sec.numerator.pow(e);
            term_power += sec.witness_power * e;
        }
        // Bring num_acc/s^common and term_num/s^term to a common power.
        if (term_power > common_power) {
            num_acc = num_acc * cert.witness.pow(term_power - common_power);
            common_power = term_power;
        } else if (term_power < common_power) {
            term_num = term_num * cert.witness.pow(common_power - term_power);
        }
        num_acc = num_acc + term_num;
    }
    return A->reduce(num_acc);
}

Polynomial compose_certificates(std::span<const RingMap> chain) {
    if (chain.empty()) fail(Errc::internal, "composing an empty certificate chain");
    const RingPtr& A = chain.front().source();
    Polynomial witness = Polynomial::constant(A->nvars(), 1);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!chain[i].certified())
            fail(Errc::certificate_required, "uncertified link in a certificate chain");
        Polynomial w = chain[i].certificate()->witness;
        // Pull the witness back to the first source through the earlier links.
        for (std::size_t j = i; j-- > 0;) w = pull_back_numerator(chain[j], w);
        witness = A->reduce(witness * w);
    }
    return witness;
}

RingMap compose_certified(std::span<const RingMap> chain) {
    if (chain.empty()) fail(Errc::internal, "composing an empty chain");
    RingMap total = chain.front();
    for (std::size_t i = 1; i < chain.size(); ++i) total = compose_maps(total, chain[i]);
    if (chain.size() == 1 && chain.front().certified()) return chain.front();

    Polynomial witness = compose_certificates(chain);
    const RingPtr& A = total.source();
    const RingPtr& T = total.target();

    Polynomial wit_img = total.apply(witness);
    auto inv = unit_inverse(T, wit_img);
    if (!inv)
        fail(Errc::internal, "composed witness is not invertible in the chain target");

    LocalizationCertificate cert;
    cert.witness = witness;
    cert.inverse = *inv;
    ImageExpressor ex(total);
    for (int t = 0; t < T->nvars(); ++t) {
        Polynomial v = Polynomial::variable(T->nvars(), t);
        bool found = false;
        Polynomial scaled = v;
        for (int k = 0; k <= 32; ++k) {
            if (auto num = ex.express(scaled)) {
                cert.sections.push_back({*num, k});
                found = true;
                break;
            }
            scaled = T->reduce(scaled * wit_img);
        }
        if (!found)
            fail(Errc::internal, "no section found for '" + T->vars()[static_cast<std::size_t>(t)] +
                                     "' while composing certificates");
    }
    RingMap out = RingMap::make(A, T, total.images(), std::move(cert));
    if (auto why = verify_certificate(out))
        fail(Errc::internal, "composed certificate failed verification: " + *why);
    return out;
}

Ideal prime_preimage(const RingMap& map, const Ideal& p) {
    const RingPtr& B = map.target();
    if (p.nvars != B->nvars()) fail(Errc::internal, "prime preimage: ambient mismatch");
    {
        std::vector<Polynomial> all = B->relations().gens;
        all.insert(all.end(), p.gens.begin(), p.gens.end());
        auto gb = buchberger(Ideal(B->nvars(), std::move(all)), TermOrder::degrevlex());
        if (is_unit_ideal(gb)) fail(Errc::invalid_prime, "preimage of the unit ideal requested");
    }
    JointAmbient j = joint_ambient(map);
    const int n = static_cast<int>(j.names.size());
    Ideal graph = graph_ideal(map, j);
    std::vector<Polynomial> gens = graph.gens;
    for (const Polynomial& q : p.gens) gens.push_back(q.remap(n, j.target_slot));
    std::vector<bool> keep(static_cast<std::size_t>(n), false);
    for (int slot : j.source_slot) keep[static_cast<std::size_t>(slot)] = true;
    Ideal elim = elimination_ideal(Ideal(n, std::move(gens)), keep);
    std::vector<int> back(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < map.source()->nvars(); ++i)
        back[static_cast<std::size_t>(j.source_slot[static_cast<std::size_t>(i)])] = i;
    std::vector<Polynomial> out;
    for (const Polynomial& q : elim.gens) {
        Polynomial r = map.source()->reduce(q.remap(map.source()->nvars(), back));
        if (!r.is_zero()) out.push_back(r);
    }
    return Ideal(map.source()->nvars(), std::move(out));
}

} // namespace schfin
