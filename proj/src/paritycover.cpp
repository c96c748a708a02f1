#include "sshr/paritycover.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sshr/gf2.hpp"
#include "sshr/greedy.hpp"
#include "sshr/pattern_bound.hpp"

namespace sshr
{

namespace
{

using clock_type = std::chrono::steady_clock;

/*
  The search works on one integer weight per candidate, primary * scale + tie,
  which orders solutions lexicographically by (primary, tie). Some optimum uses
  linearly independent rows, hence at most 2^n sets, so its tie sum stays below
  scale = 2^n * max_tie + 1.
*/
struct folded_weights
{
  int64_t scale = 1;
  std::vector<int64_t> w;
};

folded_weights fold( cover_instance const& inst )
{
  auto const& t = *inst.table;
  folded_weights f;
  int64_t max_tie = 0, max_primary = 0;
  for ( std::size_t i = 0; i < t.size(); ++i )
  {
    if ( t.primary[i] < 0 || t.tie[i] < 0 )
      throw std::invalid_argument( "objective weights must be nonnegative" );
    max_tie = std::max( max_tie, t.tie[i] );
    max_primary = std::max( max_primary, t.primary[i] );
  }
  f.scale = ( int64_t{ 1 } << inst.n ) * max_tie + 1;
  /* keep every partial sum of a selection far from overflow */
  if ( max_primary > 0 && f.scale > ( std::numeric_limits<int64_t>::max() >> 24 ) / max_primary )
    throw std::invalid_argument( "objective weights too large" );
  f.w.resize( t.size() );
  for ( std::size_t i = 0; i < t.size(); ++i )
    f.w[i] = t.primary[i] * f.scale + t.tie[i];
  return f;
}

uint32_t pattern_partitions( uint32_t n )
{
  return n <= 5 ? 5u : ( n == 6 ? 4u : 2u );
}

/* pattern tables depend only on the candidate table, so they are shared across instances */
std::shared_ptr<pattern_bound const> pattern_bound_for( cover_instance const& inst, folded_weights const& weights )
{
  using entry = std::pair<std::weak_ptr<candidate_table const>, std::shared_ptr<pattern_bound const>>;
  static std::mutex mutex;
  static std::map<candidate_table const*, entry> cache;

  std::lock_guard lock( mutex );
  auto const key = inst.table.get();
  if ( auto it = cache.find( key ); it != cache.end() && it->second.first.lock() == inst.table )
    return it->second.second;
  auto pb = std::make_shared<pattern_bound const>( inst.n, inst.table->rows, weights.w, pattern_partitions( inst.n ) );
  cache[key] = entry{ inst.table, pb };
  return pb;
}

class branch_and_bound
{
public:
  branch_and_bound( cover_instance const& inst, solve_options const& options, folded_weights const& weights,
                    pattern_bound const& patterns )
      : inst_( inst ), t_( *inst.table ), options_( options ), w_( weights.w ), scale_( weights.scale ), patterns_( patterns )
  {
    auto const points = 1u << inst.n;
    point_cands_.resize( points );
    for ( uint32_t c = 0; c < t_.size(); ++c )
      t_.rows[c].for_each( [&]( uint32_t p ) { point_cands_[p].push_back( c ); } );
    for ( auto& list : point_cands_ )
    {
      std::stable_sort( list.begin(), list.end(), [this]( uint32_t a, uint32_t b ) { return w_[a] < w_[b]; } );
    }
    remaining_.resize( points );
    for ( uint32_t p = 0; p < points; ++p )
      remaining_[p] = static_cast<uint32_t>( point_cands_[p].size() );
    decided_.assign( t_.size(), 0 );
    stamp_.assign( t_.size(), 0 );
    hits_.assign( t_.size(), 0 );
    min_w_.resize( points );
    reach_.resize( points );
  }

  void set_incumbent( std::vector<uint32_t> sel, int64_t value )
  {
    best_ = value;
    best_sel_ = std::move( sel );
  }

  bool run( clock_type::time_point start )
  {
    start_ = start;
    deadline_ = start + std::chrono::duration_cast<clock_type::duration>( std::chrono::duration<double>( options_.time_limit_s ) );
    residual_ = inst_.targets;
    cost_ = 0;
    dfs();
    return !aborted_;
  }

  std::vector<uint32_t> const& best_selection() const { return best_sel_; }
  int64_t best_value() const { return best_; }
  uint64_t nodes() const { return nodes_; }

private:
  void decide( uint32_t c )
  {
    decided_[c] = 1;
    t_.rows[c].for_each( [this]( uint32_t p ) { --remaining_[p]; } );
  }

  void undecide( uint32_t c )
  {
    decided_[c] = 0;
    t_.rows[c].for_each( [this]( uint32_t p ) { ++remaining_[p]; } );
  }

  void check_limits()
  {
    if ( options_.node_limit && nodes_ >= *options_.node_limit )
      aborted_ = true;
    if ( options_.use_wall_clock && clock_type::now() >= deadline_ )
      aborted_ = true;
  }

  /*
    Lower bound on the cost still needed to clear the residual, or nullopt when
    some odd point can no longer be covered. Also returns the branching point.

    Both bounds only use that each odd point needs at least one remaining
    candidate containing it, and that weights are nonnegative:
    - ratio bound: charging each selected set's weight evenly to the odd points
      it covers gives each odd point p at least min_c w_c / |c & R| over the
      remaining c containing p.
    - packing bound: odd points no remaining candidate covers in pairs need
      pairwise different sets, so their cheapest containing weights add up.
  */
  std::optional<std::pair<int64_t, uint32_t>> bound()
  {
    ++epoch_;
    double ratio_sum = 0.0;
    uint32_t pick = 0, pick_count = std::numeric_limits<uint32_t>::max();
    odd_points_.clear();

    bool feasible = true;
    residual_.for_each( [&]( uint32_t p ) {
      if ( !feasible )
        return;
      if ( remaining_[p] == 0u )
      {
        feasible = false;
        return;
      }
      double best_ratio = std::numeric_limits<double>::infinity();
      int64_t min_w = std::numeric_limits<int64_t>::max();
      bits256 reach;
      for ( auto c : point_cands_[p] )
      {
        if ( decided_[c] )
          continue;
        if ( stamp_[c] != epoch_ )
        {
          stamp_[c] = epoch_;
          hits_[c] = intersection_count( t_.rows[c], residual_ );
        }
        best_ratio = std::min( best_ratio, static_cast<double>( w_[c] ) / hits_[c] );
        min_w = std::min( min_w, w_[c] );
        reach |= t_.rows[c];
      }
      ratio_sum += best_ratio;
      min_w_[p] = min_w;
      reach_[p] = reach;
      odd_points_.push_back( p );
      if ( remaining_[p] < pick_count )
      {
        pick_count = remaining_[p];
        pick = p;
      }
    } );
    if ( !feasible )
      return std::nullopt;
    if ( patterns_.exact() )
      return std::pair{ int64_t{ 0 }, pick };

    /* the relative slack absorbs rounding in ratio_sum */
    auto const ratio_lb = static_cast<int64_t>( std::floor( ratio_sum * ( 1.0 - 1e-12 ) ) );

    std::stable_sort( odd_points_.begin(), odd_points_.end(), [this]( uint32_t a, uint32_t b ) { return min_w_[a] > min_w_[b]; } );
    int64_t pack_lb = 0;
    bits256 blocked;
    for ( auto p : odd_points_ )
    {
      if ( blocked.test( p ) )
        continue;
      pack_lb += min_w_[p];
      blocked |= reach_[p];
    }
    return std::pair{ std::max( ratio_lb, pack_lb ), pick };
  }

  void record()
  {
    best_ = cost_;
    best_sel_ = chosen_;
    if ( options_.on_improvement )
    {
      auto const ms = std::chrono::duration<double, std::milli>( clock_type::now() - start_ ).count();
      options_.on_improvement( ms, best_ / scale_, nodes_ );
    }
  }

  void dfs()
  {
    ++nodes_;
    check_limits();
    if ( aborted_ )
      return;
    if ( residual_.none() )
    {
      if ( cost_ < best_ )
        record();
      return;
    }

    auto const h = patterns_( residual_ );
    if ( h == pattern_bound::unreachable || cost_ + h >= best_ )
      return;
    auto const b = bound();
    if ( !b || cost_ + b->first >= best_ )
      return;
    auto const p = b->second;

    /*
      child i includes the i-th open candidate containing p and excludes the
      earlier ones; candidates go in order of cost plus the bound after taking
      them, and those that cannot beat the incumbent are excluded up front
    */
    std::vector<std::pair<int64_t, uint32_t>> children;
    std::vector<uint32_t> excluded;
    for ( auto c : point_cands_[p] )
    {
      if ( decided_[c] )
        continue;
      auto const after = patterns_( residual_ ^ t_.rows[c] );
      if ( after == pattern_bound::unreachable || cost_ + w_[c] + after >= best_ )
      {
        decide( c );
        excluded.push_back( c );
      }
      else
        children.emplace_back( w_[c] + after, c );
    }
    std::stable_sort( children.begin(), children.end(),
                      []( auto const& a, auto const& b ) { return a.first < b.first; } );
    for ( auto const& [estimate, c] : children )
    {
      if ( aborted_ || remaining_[p] == 0u || cost_ + estimate >= best_ )
        break;
      decide( c );
      residual_ ^= t_.rows[c];
      cost_ += w_[c];
      chosen_.push_back( c );
      dfs();
      chosen_.pop_back();
      cost_ -= w_[c];
      residual_ ^= t_.rows[c];
      excluded.push_back( c );
    }
    for ( auto it = excluded.rbegin(); it != excluded.rend(); ++it )
      undecide( *it );
  }

  cover_instance const& inst_;
  candidate_table const& t_;
  solve_options const& options_;
  std::vector<int64_t> const& w_;
  int64_t scale_;
  pattern_bound const& patterns_;

  std::vector<std::vector<uint32_t>> point_cands_;
  std::vector<uint32_t> remaining_;
  std::vector<uint8_t> decided_;
  std::vector<uint32_t> stamp_;
  std::vector<uint32_t> hits_;
  std::vector<int64_t> min_w_;
  std::vector<bits256> reach_;
  std::vector<uint32_t> odd_points_;
  uint32_t epoch_ = 0;

  bits256 residual_;
  int64_t cost_ = 0;
  std::vector<uint32_t> chosen_;
  int64_t best_ = std::numeric_limits<int64_t>::max();
  std::vector<uint32_t> best_sel_;

  uint64_t nodes_ = 0;
  bool aborted_ = false;
  clock_type::time_point start_;
  clock_type::time_point deadline_;
};

int64_t folded_value( folded_weights const& f, std::vector<uint32_t> const& sel )
{
  int64_t v = 0;
  for ( auto i : sel )
    v += f.w[i];
  return v;
}

} // namespace

cover_instance build_instance( bool_fn const& f, std::shared_ptr<candidate_table const> table )
{
  if ( !table || table->n != f.num_vars() )
    throw std::invalid_argument( "build_instance: family and function disagree on n" );
  return { f.num_vars(), f.truth(), std::move( table ) };
}

cover_instance build_instance( bool_fn const& f, ptope_family const& family, objective const& obj )
{
  if ( family.n != f.num_vars() )
    throw std::invalid_argument( "build_instance: family and function disagree on n" );
  return build_instance( f, std::make_shared<candidate_table const>( make_candidate_table( family, obj ) ) );
}

cover_solution make_solution( cover_instance const& inst, std::vector<uint32_t> selected )
{
  std::sort( selected.begin(), selected.end() );
  cover_solution sol;
  for ( auto i : selected )
  {
    if ( i >= inst.size() )
      throw std::invalid_argument( "candidate index " + std::to_string( i ) + " out of range" );
    sol.tc += inst.table->primary[i];
    sol.tie += inst.table->tie[i];
  }
  sol.selected = std::move( selected );
  return sol;
}

bool verify_solution( cover_instance const& inst, cover_solution const& sol )
{
  auto const& t = *inst.table;
  int64_t tc = 0, tie = 0;
  bits256 parity;
  for ( std::size_t k = 0; k < sol.selected.size(); ++k )
  {
    auto const i = sol.selected[k];
    if ( i >= t.size() )
      return false;
    if ( k > 0 && sol.selected[k - 1] >= i )
      return false;
    parity ^= t.rows[i];
    tc += t.primary[i];
    tie += t.tie[i];
  }
  return parity == inst.targets && tc == sol.tc && tie == sol.tie;
}

std::vector<uint32_t> improve_selection( cover_instance const& inst, std::vector<uint32_t> selected )
{
  auto const& t = *inst.table;
  auto const f = fold( inst );
  bool changed = true;
  while ( changed )
  {
    changed = false;

    std::vector<bits256> rows;
    for ( auto i : selected )
      rows.push_back( t.rows[i] );
    if ( auto dep = find_dependency( rows ) )
    {
      std::vector<bool> drop( selected.size(), false );
      for ( auto k : *dep )
        drop[k] = true;
      std::vector<uint32_t> kept;
      for ( std::size_t k = 0; k < selected.size(); ++k )
      {
        if ( !drop[k] )
          kept.push_back( selected[k] );
      }
      selected = std::move( kept );
      changed = true;
      continue;
    }

    for ( std::size_t a = 0; a < selected.size() && !changed; ++a )
    {
      for ( std::size_t b = a + 1; b < selected.size() && !changed; ++b )
      {
        auto const it = t.index_of.find( t.rows[selected[a]] ^ t.rows[selected[b]] );
        if ( it == t.index_of.end() )
          continue;
        if ( f.w[it->second] < f.w[selected[a]] + f.w[selected[b]] )
        {
          selected[a] = it->second;
          selected.erase( selected.begin() + static_cast<std::ptrdiff_t>( b ) );
          changed = true;
        }
      }
    }
  }
  std::sort( selected.begin(), selected.end() );
  return selected;
}

cover_solution solve( cover_instance const& inst, solve_options const& options )
{
  if ( !( options.time_limit_s > 0.0 ) )
    throw std::invalid_argument( "time limit must be positive" );
  auto const start = clock_type::now();
  auto const& t = *inst.table;
  auto const weights = fold( inst );

  gf2_basis basis;
  for ( auto const& row : t.rows )
    basis.insert( row );
  if ( !basis.in_span( inst.targets ) )
  {
    cover_solution none;
    none.status = solve_status::infeasible;
    return none;
  }

  std::vector<uint32_t> best_sel;
  int64_t best = std::numeric_limits<int64_t>::max();
  auto offer = [&]( std::vector<uint32_t> sel ) {
    sel = improve_selection( inst, std::move( sel ) );
    auto const v = folded_value( weights, sel );
    if ( v < best )
    {
      best = v;
      best_sel = std::move( sel );
    }
  };

  for ( auto const& inc : options.incumbents )
  {
    if ( !verify_solution( inst, make_solution( inst, inc ) ) )
      throw std::invalid_argument( "incumbent does not satisfy the parity constraints" );
    offer( inc );
  }
  if ( options.greedy_warm_start )
  {
    for ( auto r : { ratio{ 1, 1 }, ratio{ 3, 4 }, ratio{ 2, 3 }, ratio{ 1, 2 } } )
      offer( greedy_select( t, inst.targets, r ) );
  }
  if ( inst.targets.none() )
    offer( {} );

  auto const patterns = pattern_bound_for( inst, weights );
  branch_and_bound search( inst, options, weights, *patterns );
  if ( best != std::numeric_limits<int64_t>::max() )
  {
    search.set_incumbent( best_sel, best );
    if ( options.on_improvement )
      options.on_improvement( std::chrono::duration<double, std::milli>( clock_type::now() - start ).count(), best / weights.scale, 0 );
  }
  auto const exhausted = search.run( start );

  auto sol = make_solution( inst, search.best_selection() );
  sol.status = exhausted ? solve_status::optimal : solve_status::feasible_timeout;
  sol.nodes = search.nodes();
  sol.wall_ms = std::chrono::duration<double, std::milli>( clock_type::now() - start ).count();
  if ( !verify_solution( inst, sol ) )
    throw std::logic_error( "solver produced a selection that violates the parity constraints" );
  return sol;
}

std::string export_lp( cover_instance const& inst, bool with_integer_helpers )
{
  auto const& t = *inst.table;
  auto const points = 1u << inst.n;
  std::ostringstream os;

  os << "\\ weighted parity set cover: n=" << inst.n << ", " << t.size() << " sets, family " << to_string( t.kind )
     << ", objective " << to_string( t.obj ) << "\n";
  os << "Minimize\n obj:";
  for ( std::size_t i = 0; i < t.size(); ++i )
  {
    os << ( i ? " + " : " " ) << t.primary[i] << " x" << i;
    if ( i % 8 == 7 )
      os << "\n";
  }
  os << "\nSubject To\n";

  auto write_cover_sum = [&]( uint32_t p ) {
    bool first = true;
    std::size_t terms = 0;
    for ( std::size_t i = 0; i < t.size(); ++i )
    {
      if ( !t.rows[i].test( p ) )
        continue;
      os << ( first ? "" : " +" ) << " x" << i;
      first = false;
      if ( ++terms % 16 == 0 )
        os << "\n";
    }
  };

  for ( uint32_t p = 0; p < points; ++p )
  {
    bool const odd = inst.targets.test( p );
    if ( with_integer_helpers )
    {
      os << " cover" << p << ": V" << p << " -";
      bool first = true;
      std::size_t terms = 0;
      for ( std::size_t i = 0; i < t.size(); ++i )
      {
        if ( !t.rows[i].test( p ) )
          continue;
        os << ( first ? "" : " -" ) << " x" << i;
        first = false;
        if ( ++terms % 16 == 0 )
          os << "\n";
      }
      os << " = 0\n";
      if ( odd )
        os << " odd" << p << ": V" << p << " - 2 y" << p << " = 1\n";
      else
        os << " even" << p << ": V" << p << " - 2 z" << p << " = 0\n";
    }
    else
    {
      os << " parity" << p << ":";
      write_cover_sum( p );
      os << " - 2 y" << p << " = " << ( odd ? 1 : 0 ) << "\n";
    }
  }

  os << "Binary\n";
  for ( std::size_t i = 0; i < t.size(); ++i )
    os << " x" << i << "\n";
  os << "General\n";
  for ( uint32_t p = 0; p < points; ++p )
  {
    if ( with_integer_helpers )
      os << " V" << p << ( inst.targets.test( p ) ? " y" : " z" ) << p << "\n";
    else
      os << " y" << p << "\n";
  }
  os << "End\n";
  return os.str();
}

std::vector<uint32_t> parse_solution_indices( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::vector<uint32_t> out;
  std::string line;
  while ( std::getline( in, line ) )
  {
    std::istringstream ls( line );
    std::string name;
    if ( !( ls >> name ) || name.front() == '#' || name.front() == '\\' )
      continue;
    if ( name.front() == 'x' )
      name.erase( 0, 1 );
    std::size_t used = 0;
    unsigned long idx = 0;
    try
    {
      idx = std::stoul( name, &used );
    }
    catch ( std::exception const& )
    {
      continue; /* other variables, e.g. y or V helpers */
    }
    if ( used != name.size() )
      continue;
    std::string value;
    if ( ls >> value )
    {
      double v = 0.0;
      try
      {
        v = std::stod( value );
      }
      catch ( std::exception const& )
      {
        throw std::invalid_argument( "malformed solution value '" + value + "'" );
      }
      if ( v < 0.5 )
        continue;
    }
    out.push_back( static_cast<uint32_t>( idx ) );
  }
  std::sort( out.begin(), out.end() );
  out.erase( std::unique( out.begin(), out.end() ), out.end() );
  return out;
}

synthesis_result synth_exact( bool_fn const& f, family_kind kind, objective const& obj, solve_options options,
                              std::vector<std::vector<parallelotope>> const& hints )
{
  auto const inst = build_instance( f, cached_candidate_table( f.num_vars(), kind, obj ) );
  auto const& t = *inst.table;
  for ( auto const& hint : hints )
  {
    std::vector<uint32_t> idx;
    for ( auto const& p : hint )
    {
      auto const it = p.num_vars() == f.num_vars() ? t.index_of.find( p.vertex_bits() ) : t.index_of.end();
      if ( it == t.index_of.end() )
        throw std::invalid_argument( "hint parallelotope " + p.to_string() + " is not in the " + to_string( kind ) + " family" );
      idx.push_back( it->second );
    }
    options.incumbents.push_back( std::move( idx ) );
  }

  auto const sol = solve( inst, options );
  if ( sol.status == solve_status::infeasible )
    throw std::logic_error( "parity cover instance is infeasible" );

  std::vector<parallelotope> selected;
  for ( auto i : sol.selected )
    selected.push_back( t.sets[i] );
  auto result = assemble( f.num_vars(), std::move( selected ), obj );
  result.status = sol.status;
  result.nodes = sol.nodes;
  result.iterations = sol.selected.size();
  result.wall_ms = sol.wall_ms;
  if ( !verify_oracle( result.netlist, f ) )
    throw std::logic_error( "exact synthesis produced a circuit that fails verification" );
  return result;
}

} // namespace sshr
