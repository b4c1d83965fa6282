#include "solenoid/tower.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "solenoid/cone.hpp"
#include "solenoid/hilbert.hpp"

namespace solenoid {

namespace {

std::vector<std::size_t> slot_counts(const BranchedComplex& s)
{
    std::vector<std::size_t> counts(s.top_count(), 0);
    for (const auto& side : s.sides)
        for (const auto* list : {&side.positive, &side.negative})
            for (const Germ& g : *list)
                counts.at(g.cell) = std::max(counts.at(g.cell), g.slot + 1);
    return counts;
}

IntVector unit_vector(std::size_t n, std::size_t i)
{
    IntVector e(n, Integer(0));
    e[i] = 1;
    return e;
}

RatVector normalized(const IntVector& v)
{
    Integer sum = 0;
    for (const auto& x : v)
        sum += x;
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(v[i], sum);
    return out;
}

std::vector<double> to_doubles(const RatVector& v)
{
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i].convert_to<double>();
    return out;
}

bool strictly_positive(const IntMatrix& a)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) <= 0)
                return false;
    return true;
}

} // namespace

Submersion identity_submersion(std::shared_ptr<const BranchedComplex> s)
{
    Submersion tau;
    tau.source = s;
    tau.target = s;
    BoundaryMetadata meta;
    const auto slots = slot_counts(*s);
    for (std::size_t c = 0; c < s->top_count(); ++c)
    {
        tau.cell_map.push_back({c});
        std::vector<std::vector<Germ>> images;
        for (std::size_t k = 0; k < slots[c]; ++k)
            images.push_back({Germ{c, k}});
        meta.slot_images.push_back(std::move(images));
        meta.touches_boundary.push_back({true});
    }
    tau.boundary = std::move(meta);
    return tau;
}

Submersion compose(const Submersion& outer, const Submersion& inner)
{
    if (inner.target != outer.source && !(inner.target && outer.source && *inner.target == *outer.source))
        throw Error("shape_mismatch", "composed submersions do not share the middle complex");
    Submersion out;
    out.source = inner.source;
    out.target = outer.target;
    for (const auto& image : inner.cell_map)
    {
        std::vector<std::size_t> cells;
        for (std::size_t mid : image)
        {
            const auto& next = outer.cell_map.at(mid);
            cells.insert(cells.end(), next.begin(), next.end());
        }
        out.cell_map.push_back(std::move(cells));
    }
    if (inner.boundary && outer.boundary)
    {
        BoundaryMetadata meta;
        meta.images_exact = inner.boundary->images_exact && outer.boundary->images_exact;
        for (const auto& slots : inner.boundary->slot_images)
        {
            std::vector<std::vector<Germ>> composed;
            for (const auto& germs : slots)
            {
                std::vector<Germ> chain;
                for (const Germ& g : germs)
                {
                    const auto& further = outer.boundary->slot_images.at(g.cell).at(g.slot);
                    chain.insert(chain.end(), further.begin(), further.end());
                }
                composed.push_back(std::move(chain));
            }
            meta.slot_images.push_back(std::move(composed));
        }
        if (inner.source && inner.source->dim == 1)
            for (const auto& cells : out.cell_map)
            {
                std::vector<bool> touches(cells.size(), false);
                if (!touches.empty())
                {
                    touches.front() = true;
                    touches.back() = true;
                }
                meta.touches_boundary.push_back(std::move(touches));
            }
        out.boundary = std::move(meta);
    }
    return out;
}

IntMatrix induced_matrix(const Submersion& tau)
{
    if (!tau.source || !tau.target)
        throw Error("invalid_submersion", "submersion is missing a complex");
    const BranchedComplex& src = *tau.source;
    const BranchedComplex& tgt = *tau.target;
    if (tau.cell_map.size() != src.top_count())
        throw Error("invalid_submersion", "cell map must list an image for every source top cell");

    // counts[target cell][source region]
    Matrix<Integer> counts(tgt.top_count(), src.region_count);
    for (std::size_t s = 0; s < tau.cell_map.size(); ++s)
        for (std::size_t t : tau.cell_map[s])
        {
            if (t >= tgt.top_count())
                throw Error("invalid_submersion", "cell map names a missing target cell");
            counts(t, src.region_of_cell.at(s)) += 1;
        }

    for (std::size_t t = 0; t < tgt.top_count(); ++t)
    {
        Integer total = 0;
        for (std::size_t j = 0; j < src.region_count; ++j)
            total += counts(t, j);
        if (total == 0)
            throw Error("non_surjective", "target cell '" + tgt.labels.back().at(t) + "' has no preimage");
    }

    IntMatrix a(tgt.region_count, src.region_count);
    std::vector<bool> seen(tgt.region_count, false);
    for (std::size_t t = 0; t < tgt.top_count(); ++t)
    {
        const std::size_t i = tgt.region_of_cell.at(t);
        for (std::size_t j = 0; j < src.region_count; ++j)
        {
            if (!seen[i])
                a(i, j) = counts(t, j);
            else if (a(i, j) != counts(t, j))
                throw Error("invalid_submersion", "preimage counts vary inside target region " + std::to_string(i));
        }
        seen[i] = true;
    }
    return a;
}

std::string to_string(Check c)
{
    switch (c)
    {
    case Check::pass:
        return "pass";
    case Check::fail:
        return "fail";
    case Check::undecidable:
        return "undecidable";
    }
    return "undecidable";
}

ZoomedOutReport zoomed_out_check(const Submersion& tau)
{
    ZoomedOutReport report;
    if (!tau.boundary || !tau.source || !tau.target)
    {
        report.notes.push_back("no adjacency metadata attached to the submersion");
        return report;
    }
    const BoundaryMetadata& meta = *tau.boundary;
    const BranchedComplex& src = *tau.source;
    const auto slots = slot_counts(src);
    if (meta.slot_images.size() != src.top_count())
    {
        report.notes.push_back("adjacency metadata does not cover every source cell");
        return report;
    }

    report.nesting = meta.images_exact ? Check::pass : Check::fail;

    report.boundary_inclusion = Check::pass;
    for (std::size_t c = 0; c < src.top_count(); ++c)
    {
        const auto& images = meta.slot_images[c];
        bool ok = images.size() >= slots[c];
        for (std::size_t k = 0; ok && k < slots[c]; ++k)
            ok = !images[k].empty();
        if (!ok)
        {
            report.boundary_inclusion = Check::fail;
            report.notes.push_back("boundary of '" + src.labels.back()[c] + "' does not map into target faces");
        }
    }

    if (meta.touches_boundary.size() != src.top_count())
    {
        report.notes.push_back("strict growth needs boundary-contact flags");
    }
    else
    {
        report.strict_growth = Check::pass;
        for (std::size_t c = 0; c < src.top_count(); ++c)
        {
            const auto& flags = meta.touches_boundary[c];
            if (std::all_of(flags.begin(), flags.end(), [](bool b) { return b; }))
            {
                report.strict_growth = Check::fail;
                report.notes.push_back("image of '" + src.labels.back()[c] + "' has no cell away from its boundary");
            }
        }
    }

    report.border_forcing = Check::pass;
    for (std::size_t f = 0; f < src.sides.size(); ++f)
        for (const auto* side : {&src.sides[f].positive, &src.sides[f].negative})
        {
            const std::vector<Germ>* first = nullptr;
            for (const Germ& g : *side)
            {
                const auto& image = meta.slot_images.at(g.cell).at(g.slot);
                if (!first)
                    first = &image;
                else if (image != *first)
                {
                    report.border_forcing = Check::fail;
                    report.notes.push_back("germs along '" + src.labels[src.labels.size() - 2][f] +
                                           "' map to different target sheets");
                    break;
                }
            }
        }
    return report;
}

Tower Tower::stationary(IntMatrix a, std::shared_ptr<const BranchedComplex> complex)
{
    if (a.rows() != a.cols() || a.rows() == 0)
        throw Error("invalid_tower", "stationary tower needs a nonempty square matrix");
    if (complex && complex->region_count != a.rows())
        throw Error("invalid_tower", "matrix size differs from the number of regions of the complex");
    Tower t;
    t.kind_ = Kind::stationary;
    t.matrices_.push_back(std::move(a));
    t.complex_ = std::move(complex);
    return t;
}

Tower Tower::explicit_matrices(std::vector<IntMatrix> matrices)
{
    if (matrices.empty())
        throw Error("invalid_tower", "explicit tower needs at least one matrix");
    for (std::size_t n = 0; n < matrices.size(); ++n)
    {
        const auto& a = matrices[n];
        if (a.rows() == 0 || a.cols() == 0)
            throw Error("invalid_tower", "empty transition matrix at level " + std::to_string(n + 1));
        if (n + 1 < matrices.size() && a.cols() != matrices[n + 1].rows())
            throw Error("invalid_tower", "A_" + std::to_string(n + 1) + " and A_" + std::to_string(n + 2) +
                                             " have incompatible shapes");
        for (std::size_t i = 0; i < a.rows(); ++i)
        {
            bool nonzero = false;
            for (std::size_t j = 0; j < a.cols(); ++j)
            {
                if (a(i, j) < 0)
                    throw Error("invalid_tower", "negative entry in A_" + std::to_string(n + 1));
                nonzero = nonzero || a(i, j) != 0;
            }
            if (!nonzero)
                throw Error("non_surjective", "A_" + std::to_string(n + 1) + " has a zero row");
        }
    }
    Tower t;
    t.kind_ = Kind::explicit_matrices;
    t.matrices_ = std::move(matrices);
    return t;
}

std::size_t Tower::depth() const noexcept
{
    if (kind_ == Kind::stationary)
        return std::numeric_limits<std::size_t>::max();
    return matrices_.size() + 1;
}

const IntMatrix& Tower::matrix(std::size_t n) const
{
    if (n == 0)
        throw Error("depth_exceeded", "levels are numbered from 1");
    if (kind_ == Kind::stationary)
        return matrices_.front();
    if (n > matrices_.size())
        throw Error("depth_exceeded", "explicit tower has only " + std::to_string(matrices_.size()) + " matrices");
    return matrices_[n - 1];
}

std::size_t Tower::level_size(std::size_t n) const
{
    if (n == 0)
        throw Error("depth_exceeded", "levels are numbered from 1");
    if (kind_ == Kind::stationary)
        return matrices_.front().rows();
    if (n == 1)
        return matrices_.front().rows();
    return matrix(n - 1).cols();
}

std::string to_string(Verdict v)
{
    switch (v)
    {
    case Verdict::unique:
        return "unique";
    case Verdict::multiple:
        return "multiple";
    case Verdict::undecided:
        return "undecided";
    }
    return "undecided";
}

namespace {

std::vector<IntVector> starting_rays(const Tower& t, std::size_t n)
{
    if (t.kind() == Tower::Kind::stationary && t.complex())
        return positive_cone(*t.complex()).extremal_rays;
    std::vector<IntVector> rays;
    const std::size_t p = t.level_size(n);
    for (std::size_t i = 0; i < p; ++i)
        rays.push_back(unit_vector(p, i));
    return rays;
}

double diameter_of(const std::vector<RatVector>& rays)
{
    double d = 0;
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            d = std::max(d, projective_distance(rays[i], rays[j]));
    return d;
}

double diameter_of(const std::vector<std::vector<double>>& rays)
{
    double d = 0;
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            d = std::max(d, projective_distance(rays[i], rays[j]));
    return d;
}

/// Drops duplicates and rays inside the conic hull of the remaining ones.
std::vector<std::size_t> extremal_subset(const std::vector<RatVector>& rays, const Rational& tol)
{
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (std::find(rays.begin(), rays.begin() + static_cast<std::ptrdiff_t>(i), rays[i]) ==
            rays.begin() + static_cast<std::ptrdiff_t>(i))
            keep.push_back(i);
    for (std::size_t pos = 0; pos < keep.size();)
    {
        std::vector<RatVector> others;
        for (std::size_t q = 0; q < keep.size(); ++q)
            if (q != pos)
                others.push_back(rays[keep[q]]);
        if (!others.empty() && in_conic_hull(others, rays[keep[pos]], tol))
            keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(pos));
        else
            ++pos;
    }
    return keep;
}

} // namespace

std::vector<RatVector> cone_generators(const Tower& t, std::size_t n)
{
    if (n == 0)
        throw Error("depth_exceeded", "levels are numbered from 1");
    if (n > t.depth())
        throw Error("depth_exceeded", "requested depth " + std::to_string(n) + " exceeds tower depth " +
                                          std::to_string(t.depth()));
    IntMatrix p = IntMatrix::identity(t.level_size(1));
    for (std::size_t k = 1; k < n; ++k)
        p = p * t.matrix(k);
    std::vector<RatVector> out;
    for (const auto& r : starting_rays(t, n))
    {
        const IntVector image = p * r;
        if (std::all_of(image.begin(), image.end(), [](const Integer& x) { return x == 0; }))
            continue;
        out.push_back(normalized(image));
    }
    return out;
}

MeasureConeReport measure_cone(const Tower& t, std::size_t depth, double tol, const ConeOptions& options)
{
    if (depth == 0)
        throw Error("depth_exceeded", "depth must be at least 1");
    if (depth > t.depth())
        throw Error("depth_exceeded", "requested depth " + std::to_string(depth) + " exceeds tower depth " +
                                          std::to_string(t.depth()));

    MeasureConeReport report;
    report.depth = depth;

    const std::size_t p1 = t.level_size(1);
    IntMatrix exact_product = IntMatrix::identity(p1);
    Matrix<long double> float_product;
    bool exact = true;
    std::size_t float_steps = 0;

    std::vector<RatVector> exact_images;
    std::vector<std::vector<double>> float_images;

    for (std::size_t n = 1; n <= depth; ++n)
    {
        if (n >= 2)
        {
            const IntMatrix& a = t.matrix(n - 1);
            if (exact)
            {
                exact_product = exact_product * a;
                if (max_bits(exact_product) > options.exact_bit_limit)
                {
                    exact = false;
                    const std::size_t bits = max_bits(exact_product);
                    const std::size_t shift = bits > 60 ? bits - 60 : 0;
                    float_product = Matrix<long double>(exact_product.rows(), exact_product.cols());
                    for (std::size_t i = 0; i < exact_product.rows(); ++i)
                        for (std::size_t j = 0; j < exact_product.cols(); ++j)
                            float_product(i, j) =
                                static_cast<long double>(Integer(exact_product(i, j) >> shift).convert_to<double>());
                    report.notes.push_back("switched to floating rays at level " + std::to_string(n));
                }
            }
            else
            {
                Matrix<long double> af(a.rows(), a.cols());
                for (std::size_t i = 0; i < a.rows(); ++i)
                    for (std::size_t j = 0; j < a.cols(); ++j)
                        af(i, j) = static_cast<long double>(a(i, j).convert_to<double>());
                float_product = float_product * af;
                long double top = 0;
                for (std::size_t i = 0; i < float_product.rows(); ++i)
                    for (std::size_t j = 0; j < float_product.cols(); ++j)
                        top = std::max(top, float_product(i, j));
                for (std::size_t i = 0; i < float_product.rows(); ++i)
                    for (std::size_t j = 0; j < float_product.cols(); ++j)
                        float_product(i, j) /= top;
                ++float_steps;
            }
        }

        const auto rays = starting_rays(t, n);
        exact_images.clear();
        float_images.clear();
        for (const auto& r : rays)
        {
            if (exact)
            {
                const IntVector image = exact_product * r;
                if (std::all_of(image.begin(), image.end(), [](const Integer& x) { return x == 0; }))
                    continue;
                exact_images.push_back(normalized(image));
            }
            else
            {
                std::vector<long double> image(float_product.rows(), 0.0L);
                for (std::size_t i = 0; i < float_product.rows(); ++i)
                    for (std::size_t j = 0; j < float_product.cols(); ++j)
                        image[i] += float_product(i, j) * static_cast<long double>(r[j].convert_to<double>());
                long double sum = 0;
                for (auto x : image)
                    sum += x;
                if (sum == 0)
                    continue;
                std::vector<double> ray(image.size());
                for (std::size_t i = 0; i < image.size(); ++i)
                    ray[i] = static_cast<double>(image[i] / sum);
                float_images.push_back(std::move(ray));
            }
        }
        report.diameter_history.push_back(exact ? diameter_of(exact_images) : diameter_of(float_images));
    }

    report.exact = exact;
    report.hilbert_diameter = report.diameter_history.back();
    if (!exact)
        report.error_bound = static_cast<double>(float_steps + 1) * static_cast<double>(p1) * 1e-18 * 8;

    // Extremal rays of W_depth.
    if (exact)
    {
        for (std::size_t i : extremal_subset(exact_images, Rational(0)))
        {
            report.exact_rays.push_back(exact_images[i]);
            report.rays.push_back(to_doubles(exact_images[i]));
        }
    }
    else
    {
        std::vector<RatVector> approx;
        for (const auto& r : float_images)
        {
            RatVector q;
            for (double x : r)
                q.emplace_back(x);
            approx.push_back(std::move(q));
        }
        for (std::size_t i : extremal_subset(approx, Rational(1, 1000000000)))
            report.rays.push_back(float_images[i]);
    }

    if (report.rays.empty())
    {
        report.verdict = Verdict::undecided;
        report.notes.push_back("the positive cone is {0}; there is no invariant measure to certify");
        return report;
    }

    // Mean frequency vector.
    const std::size_t dim = report.rays.front().size();
    if (exact)
    {
        RatVector mean(dim, Rational(0));
        for (const auto& r : report.exact_rays)
            for (std::size_t i = 0; i < dim; ++i)
                mean[i] += r[i];
        for (auto& x : mean)
            x /= Rational(static_cast<long>(report.exact_rays.size()));
        report.exact_frequencies = mean;
        report.frequencies = to_doubles(mean);
    }
    else
    {
        std::vector<double> mean(dim, 0.0);
        for (const auto& r : report.rays)
            for (std::size_t i = 0; i < dim; ++i)
                mean[i] += r[i] / static_cast<double>(report.rays.size());
        report.frequencies = mean;
    }

    // Separated directions: greedy clustering at 100 tol.
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < report.rays.size(); ++i)
    {
        bool joined = false;
        for (std::size_t r : reps)
        {
            const double d = exact ? projective_distance(report.exact_rays[i], report.exact_rays[r])
                                   : projective_distance(report.rays[i], report.rays[r]);
            if (d <= 100 * tol)
            {
                joined = true;
                break;
            }
        }
        if (!joined)
            reps.push_back(i);
    }

    report.extremal_count = report.rays.size();
    if (reps.size() < report.rays.size())
    {
        std::vector<std::vector<double>> kept;
        std::vector<RatVector> kept_exact;
        for (std::size_t i : reps)
        {
            kept.push_back(report.rays[i]);
            if (exact)
                kept_exact.push_back(report.exact_rays[i]);
        }
        report.rays = std::move(kept);
        report.exact_rays = std::move(kept_exact);
    }

    const auto& hist = report.diameter_history;
    const std::size_t w = options.stabilization_window;
    bool stabilized = false;
    if (hist.size() > w)
    {
        const double now = hist.back();
        const double before = hist[hist.size() - 1 - w];
        stabilized = std::isfinite(now) && std::isfinite(before) && now > 0 &&
                     std::abs(now - before) <= options.stabilization_change * now;
    }

    if (report.hilbert_diameter < tol)
    {
        report.verdict = Verdict::unique;
        report.multiplicity = 1;
    }
    else if (reps.size() >= 2 && stabilized)
    {
        report.verdict = Verdict::multiple;
        report.multiplicity = reps.size();
    }
    else
    {
        report.verdict = Verdict::undecided;
        report.multiplicity = reps.size();
    }
    return report;
}

std::optional<std::size_t> primitivity_exponent(const IntMatrix& a)
{
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n)
        return std::nullopt;
    std::vector<std::vector<bool>> base(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            base[i][j] = a(i, j) > 0;
    auto power = base;
    const std::size_t limit = (n - 1) * (n - 1) + 1;
    for (std::size_t k = 1; k <= limit; ++k)
    {
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i)
            for (std::size_t j = 0; j < n && all; ++j)
                all = power[i][j];
        if (all)
            return k;
        std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < n; ++m)
                if (power[i][m])
                    for (std::size_t j = 0; j < n; ++j)
                        if (base[m][j])
                            next[i][j] = true;
        power = std::move(next);
    }
    return std::nullopt;
}

ErgodicityResult unique_ergodicity(const Tower& t, std::size_t depth, double tol, const ConeOptions& options)
{
    ErgodicityResult result;
    result.cone = measure_cone(t, depth, tol, options);
    result.certificate.diameters = result.cone.diameter_history;
    const std::size_t steps = depth - 1;
    const bool has_measure = !result.cone.rays.empty();

    if (t.kind() == Tower::Kind::stationary)
    {
        const IntMatrix& a = t.matrix(1);
        if (const auto k = primitivity_exponent(a); k && has_measure)
        {
            IntMatrix ak = a;
            for (std::size_t i = 1; i < *k; ++i)
                ak = ak * a;
            const double diameter = projective_diameter(ak);
            auto& cert = result.certificate;
            cert.kind = "primitive_power";
            cert.power = *k;
            cert.coefficient = std::tanh(diameter / 4.0);
            const std::size_t blocks = steps / *k;
            cert.diameter_bound = blocks == 0 ? std::numeric_limits<double>::infinity()
                                              : diameter * std::pow(cert.coefficient, static_cast<double>(blocks - 1));
            // A fixed strictly positive block contracts uniformly, so the nested
            // cones shrink to one ray at every depth.
            result.verdict = Verdict::unique;
            result.multiplicity = 1;
            return result;
        }
    }
    else if (has_measure)
    {
        auto& cert = result.certificate;
        std::vector<double> diameters;
        IntMatrix block;
        bool open = false;
        for (std::size_t n = 1; n <= steps; ++n)
        {
            block = open ? block * t.matrix(n) : t.matrix(n);
            open = true;
            if (strictly_positive(block))
            {
                const double d = projective_diameter(block);
                diameters.push_back(d);
                cert.block_coefficients.push_back(std::tanh(d / 4.0));
                open = false;
            }
        }
        if (!diameters.empty())
        {
            double bound = diameters.back();
            for (std::size_t b = 0; b + 1 < cert.block_coefficients.size(); ++b)
                bound *= cert.block_coefficients[b];
            cert.diameter_bound = bound;
            if (bound < tol)
            {
                cert.kind = "birkhoff_product";
                result.verdict = Verdict::unique;
                result.multiplicity = 1;
                return result;
            }
        }
    }

    result.certificate.kind = "measured";
    result.verdict = result.cone.verdict;
    result.multiplicity = result.cone.multiplicity;
    return result;
}

std::size_t ergodic_bound(const Tower& t)
{
    if (t.kind() == Tower::Kind::stationary)
    {
        if (t.complex())
            return top_cycle_space(*t.complex()).size();
        return t.level_size(1);
    }
    std::size_t best = t.level_size(1);
    for (std::size_t n = 2; n <= t.depth(); ++n)
        best = std::min(best, t.level_size(n));
    return best;
}

} // namespace solenoid
