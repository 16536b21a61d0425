#!/usr/bin/env python3
"""
springerstab 启动脚本
"""

import sys
from springerstab.main import run


def main():
    """主函数"""
    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        print("\n已中断", file=sys.stderr)
        sys.exit(2)


if __name__ == "__main__":
    main()
