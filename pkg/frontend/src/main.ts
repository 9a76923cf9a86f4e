// Entry point: the resolver serves this page for every coordinate route,
// so the path alone carries the state. Query strings are never read.

import { boot } from "./page";

boot(document, window.location.pathname);
