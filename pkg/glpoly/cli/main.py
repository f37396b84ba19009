import logging

import click
import click_log

from . import opts


@click.group()
@click_log.simple_verbosity_option(logging.getLogger(), default="WARNING")
@opts.enumeration_threshold
@click.pass_context
def main(ctx, enumeration_threshold):
    ctx.obj = {
        "enumeration_threshold": enumeration_threshold,
    }
    click_log.basic_config()


if __name__ == "__main__":
    main()
