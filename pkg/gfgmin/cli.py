"""Command-line interface for gfgmin."""
import logging
import sys
import click
from pathlib import Path
from .automaton import structural_report
from .canonizer import alpha_maximize, alpha_maximize_homogeneous, canonical_relabel
from .config import load_config
from .generate import random_tncw
from .hoa import HoaParseError, emit_hoa, parse_hoa, to_dot
from .iso import isomorphic, safe_isomorphic
from .language import breakpoint_determinize, distinguishing_lasso, random_lassos, sampled_disagreement
from .minimizer import minimize as minimize_automaton
from .nicer import validate_nice
from .safe_structure import safe_components

EXIT_NEGATIVE = 1
EXIT_PARSE_ERROR = 3


def _load(path, sink=False):
    """Parse an HOA file, exiting with the parse-error code on failure."""
    try:
        return parse_hoa(Path(path).read_bytes(), complete=sink)
    except HoaParseError as e:
        click.echo(f"Error: {path}:{e}", err=True)
        sys.exit(EXIT_PARSE_ERROR)


def _write(data: bytes, output):
    if output:
        Path(output).write_bytes(data)
    else:
        click.echo(data.decode("utf-8"), nl=False)


@click.group()
@click.option('-c', '--config', type=click.Path(exists=True),
              help='Path to configuration file')
@click.option('-v', '--verbose', count=True,
              help='Log progress to stderr (repeat for debug output)')
@click.pass_context
def cli(ctx, config, verbose):
    """Minimize and canonize good-for-games co-Büchi automata."""
    try:
        cfg = load_config(config)
    except Exception as e:
        click.echo(f"Error: {str(e)}", err=True)
        sys.exit(1)
    level = {0: cfg.log_level.upper(), 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = cfg


@cli.command()
@click.argument('automaton_file', type=click.Path(exists=True))
@click.option('-o', '--output', type=click.Path(), help='Write the result here instead of stdout')
@click.option('--sink/--no-sink', default=None, help='Complete a non-total input with a rejecting sink')
@click.option('--determinize/--no-determinize', default=None,
              help='Determinize a nondeterministic input first, so non-GFG inputs are accepted (may grow the input exponentially)')
@click.option('--dot', is_flag=True, help='Emit Graphviz instead of HOA')
@click.pass_obj
def minimize(cfg, automaton_file, output, sink, determinize, dot):
    """Minimize a GFG-tNCW."""
    sink = cfg.pipeline_config.add_sink if sink is None else sink
    determinize = cfg.pipeline_config.determinize if determinize is None else determinize
    a = _load(automaton_file, sink)
    try:
        result = minimize_automaton(a, determinize=determinize)
    except Exception as e:
        click.echo(f"Error: {str(e)}", err=True)
        sys.exit(1)
    click.echo(f"{a.num_states} -> {result.num_states} states", err=True)
    _write(to_dot(result).encode("utf-8") if dot else emit_hoa(result), output)


@cli.command()
@click.argument('automaton_file', type=click.Path(exists=True))
@click.option('--mode', type=click.Choice(['max', 'hom']), default='max',
              help='Full α-maximization or α-maximization up to homogeneity')
@click.option('-o', '--output', type=click.Path(), help='Write the result here instead of stdout')
@click.option('--sink', is_flag=True, help='Complete a non-total input with a rejecting sink')
def canonize(automaton_file, mode, output, sink):
    """Saturate with allowed α-transitions and relabel canonically."""
    a = _load(automaton_file, sink)
    try:
        saturated = alpha_maximize(a) if mode == 'max' else alpha_maximize_homogeneous(a)
        result = canonical_relabel(saturated)
    except Exception as e:
        click.echo(f"Error: {str(e)}", err=True)
        sys.exit(1)
    _write(emit_hoa(result), output)


@cli.command()
@click.argument('automaton_file', type=click.Path(exists=True))
@click.option('--sink', is_flag=True, help='Complete a non-total input with a rejecting sink')
def validate(automaton_file, sink):
    """Report structural and niceness properties as key=value lines."""
    a = _load(automaton_file, sink)
    try:
        structural = structural_report(a)
        nice = validate_nice(a)
    except Exception as e:
        click.echo(f"Error: {str(e)}", err=True)
        sys.exit(1)
    for key, value in structural.items():
        click.echo(f"structural.{key}={str(value).lower()}")
    for key in ("reachable", "normal", "safe_deterministic", "semantically_deterministic", "all_states_gfg"):
        click.echo(f"nice.{key}={str(bool(getattr(nice, key))).lower()}")
    click.echo(f"nice={str(nice.nice).lower()}")


@cli.command()
@click.argument('first', type=click.Path(exists=True))
@click.argument('second', type=click.Path(exists=True))
@click.option('--lassos', type=int, default=None, help='Number of sampled lassos checked first')
@click.option('--seed', type=int, default=None, help='Seed for lasso sampling')
@click.pass_obj
def equiv(cfg, first, second, lassos, seed):
    """Exit 0 iff the two automata recognize the same language."""
    a, b = _load(first), _load(second)
    oracle = cfg.oracle_config
    try:
        words = random_lassos(a.alphabet, oracle.lassos if lassos is None else lassos,
                              oracle.max_lasso_length, oracle.seed if seed is None else seed)
        witness = sampled_disagreement(a, b, words) or distinguishing_lasso(a, b)
    except Exception as e:
        click.echo(f"Error: {str(e)}", err=True)
        sys.exit(1)
    if witness is None:
        click.echo("equivalent")
        return
    click.echo(f"not equivalent: {witness.render(a.alphabet)}")
    sys.exit(EXIT_NEGATIVE)


@cli.command()
@click.argument('first', type=click.Path(exists=True))
@click.argument('second', type=click.Path(exists=True))
@click.option('--safe', is_flag=True, help='Only require ᾱ-transitions to be respected')
def iso(first, second, safe):
    """Exit 0 iff the automata are (safe) isomorphic; prints the bijection."""
    a, b = _load(first), _load(second)
    bijection = safe_isomorphic(a, b) if safe else isomorphic(a, b)
    if bijection is None:
        click.echo("not safe isomorphic" if safe else "not isomorphic")
        sys.exit(EXIT_NEGATIVE)
    for line in bijection.lines():
        click.echo(line)


@cli.command()
@click.argument('automaton_file', type=click.Path(exists=True))
@click.option('-o', '--output', type=click.Path(), help='Write the result here instead of stdout')
@click.option('--sink', is_flag=True, help='Complete a non-total input with a rejecting sink')
def determinize(automaton_file, output, sink):
    """Breakpoint determinization."""
    a = _load(automaton_file, sink)
    _write(emit_hoa(breakpoint_determinize(a)), output)


@cli.command()
@click.argument('automaton_file', type=click.Path(exists=True))
@click.option('--sink', is_flag=True, help='Complete a non-total input with a rejecting sink')
def info(automaton_file, sink):
    """Print sizes and the safe-component structure."""
    a = _load(automaton_file, sink)
    d = safe_components(a)
    click.echo(f"states={a.num_states}")
    click.echo(f"transitions={len(a.transitions)}")
    click.echo(f"alpha={a.alpha_count}")
    click.echo(f"safe_components={len(d)}")
    click.echo(f"component_sizes={','.join(str(s) for s in d.sizes())}")


@cli.command()
@click.option('--states', type=int, default=None, help='Number of states')
@click.option('--symbols', type=int, default=None, help='Alphabet size')
@click.option('--seed', type=int, default=None, help='Random seed')
@click.option('--deterministic', is_flag=True, help='Generate a deterministic automaton')
@click.option('-o', '--output', type=click.Path(), help='Write the result here instead of stdout')
@click.pass_obj
def gen(cfg, states, symbols, seed, deterministic, output):
    """Generate a random total tNCW."""
    g = cfg.generator_config
    try:
        a = random_tncw(
            g.states if states is None else states,
            g.symbols if symbols is None else symbols,
            cfg.oracle_config.seed if seed is None else seed,
            deterministic=deterministic,
            alpha_probability=g.alpha_probability,
            nondeterminism_probability=g.nondeterminism_probability,
        )
    except Exception as e:
        click.echo(f"Error: {str(e)}", err=True)
        sys.exit(1)
    _write(emit_hoa(a), output)


if __name__ == '__main__':
    cli()
