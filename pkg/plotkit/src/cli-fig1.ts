#!/usr/bin/env node
import { runCli } from "./cli.js";

process.exit(runCli("fig1", process.argv.slice(2)));
