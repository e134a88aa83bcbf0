from .main import main, build_parser, RunConfig, cmd_eval, cmd_score, cmd_fit, cmd_backtest, cmd_verify
