#include <string>

#include "mmm/certifier.hpp"

namespace mmm {

namespace {

// Value of m at x according to piece p, if p contains x.
std::optional<Rational> value_at(const Piece& p, const Rational& x) {
    if (const auto* a = std::get_if<Atom>(&p)) {
        if (a->interval.contains(x)) return a->m_form(x);
        return std::nullopt;
    }
    const auto& s = std::get<SingletonPiece>(p);
    if (s.point == x) return s.m;
    return std::nullopt;
}

bool lo_inclusive(const Piece& p) {
    if (const auto* a = std::get_if<Atom>(&p)) return a->interval.lo_closed();
    return true;
}

bool hi_inclusive(const Piece& p) {
    if (const auto* a = std::get_if<Atom>(&p)) return a->interval.hi_closed();
    return true;
}

// Does the form hold at x, judged by whichever of the pieces near index i
// covers x?
bool form_holds_near(std::span<const Piece> pieces, std::size_t i, const Rational& x, const AffineForm& f) {
    const std::size_t from = i == 0 ? 0 : i - 1;
    const std::size_t to = std::min(pieces.size(), i + 2);
    for (std::size_t k = from; k < to; ++k)
        if (auto v = value_at(pieces[k], x)) return *v == f(x);
    return false;
}

}  // namespace

Aggregate aggregate(std::span<const Piece> pieces) {
    Aggregate out;
    if (pieces.empty()) return out;

    for (std::size_t i = 1; i < pieces.size(); ++i)
        if (piece_hi(pieces[i - 1]) != piece_lo(pieces[i]))
            throw std::invalid_argument("aggregate: pieces are not contiguous at " + piece_hi(pieces[i - 1]).str());

    // Segment of every piece. Singletons join the segment whose form gives
    // their value; at a corner that is the earlier one.
    std::vector<std::size_t> segment_of(pieces.size(), 0);
    std::vector<AffineForm> forms;
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (const auto* s = std::get_if<SingletonPiece>(&pieces[i])) {
            if (!forms.empty() && forms.back()(s->point) == s->m)
                segment_of[i] = forms.size() - 1;
            else
                pending.push_back(i);
            continue;
        }
        const auto& atom = std::get<Atom>(pieces[i]);
        if (forms.empty() || forms.back() != atom.m_form) {
            if (!forms.empty()) {
                const Rational& boundary = atom.interval.lo();
                const auto meet = affine_intersection(forms.back(), atom.m_form);
                if (!meet || *meet != boundary)
                    throw DiscontinuityError("m-forms do not meet at " + boundary.str() +
                                             (meet ? " (they meet at " + meet->str() + ")" : " (parallel)"));
                out.corners.push_back(boundary);
            }
            forms.push_back(atom.m_form);
        }
        segment_of[i] = forms.size() - 1;
        for (std::size_t k : pending) {
            const auto& s = std::get<SingletonPiece>(pieces[k]);
            if (atom.m_form(s.point) != s.m)
                throw DiscontinuityError("value at " + s.point.str() + " matches neither adjacent m-form");
            segment_of[k] = segment_of[i];
        }
        pending.clear();
    }
    if (!pending.empty()) {
        const auto& s = std::get<SingletonPiece>(pieces[pending.front()]);
        if (forms.empty()) {
            // Only singletons: each is its own constant piece.
            throw std::invalid_argument("aggregate: no atoms in piece stream");
        }
        throw DiscontinuityError("value at " + s.point.str() + " matches no adjacent m-form");
    }

    // Subintervals: runs of equal L inside one segment.
    std::vector<std::size_t> first_piece;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const bool fresh = out.subintervals.empty() || segment_of[i] != segment_of[i - 1] ||
                           piece_length(pieces[i]) != out.subintervals.back().length;
        if (fresh) {
            out.subintervals.push_back(Subinterval{
                RInterval(piece_lo(pieces[i]), piece_hi(pieces[i]), lo_inclusive(pieces[i]), hi_inclusive(pieces[i])),
                piece_length(pieces[i]), {}, {}});
            first_piece.push_back(i);
        } else {
            auto& cur = out.subintervals.back();
            cur.interval = RInterval(cur.interval.lo(), piece_hi(pieces[i]), cur.interval.lo_closed(),
                                     hi_inclusive(pieces[i]));
        }
        auto& cur = out.subintervals.back();
        if (const auto* a = std::get_if<Atom>(&pieces[i]))
            cur.atoms.push_back(*a);
        else
            cur.singletons.push_back(std::get<SingletonPiece>(pieces[i]));
    }

    for (std::size_t k = 0; k < out.subintervals.size(); ++k) {
        const std::size_t seg = segment_of[first_piece[k]];
        if (seg == out.segments.size())
            out.segments.push_back(Segment{RInterval::point(out.subintervals[k].interval.lo()), forms[seg], {}});
        out.segments[seg].subintervals.push_back(k);
    }

    // Segment closure: the form holds at an endpoint when some piece covers it
    // with a matching value.
    for (auto& seg : out.segments) {
        const std::size_t first = first_piece[seg.subintervals.front()];
        const std::size_t last_sub = seg.subintervals.back();
        const std::size_t last = last_sub + 1 < first_piece.size() ? first_piece[last_sub + 1] - 1 : pieces.size() - 1;
        const Rational lo = piece_lo(pieces[first]);
        const Rational hi = piece_hi(pieces[last]);
        const bool lo_closed = form_holds_near(pieces, first, lo, seg.m_form);
        const bool hi_closed = form_holds_near(pieces, last, hi, seg.m_form);
        if (lo == hi)
            seg.interval = RInterval::point(lo);
        else
            seg.interval = RInterval(lo, hi, lo_closed, hi_closed);
    }
    return out;
}

}  // namespace mmm
